#ifndef BINDERKIT_SEXPR_HPP
#define BINDERKIT_SEXPR_HPP

#include <string>

#include "binderkit/builtin.hpp"
#include "binderkit/scopecheck.hpp"

namespace binderkit {

struct ParseError {
  std::string message;
  int line = 0;
  int col = 0;

  std::string show() const {
    return message + " at " + std::to_string(line) + ":" + std::to_string(col);
  }
};

/// Parses the surface notation of one syntax into a raw term. Heads are
/// only accepted for the syntax they belong to; the annotated syntax has
/// no input grammar and is rejected outright.
Result<RawTerm, ParseError> parse(const Syntax& syntax, const std::string& input);

/// Renders an internal term back into the surface notation, inventing
/// distinct binder names (x0, x1, ...); free variables print through
/// `names`. The output reparses and scope-checks to an equal term.
std::string render_sexpr(const Syntax& syntax, const std::vector<std::string>& names,
                         const Term& t);

/// The output-only notation for elaborated terms: constructors carry their
/// types, variables print as de Bruijn #N.
std::string render_stlc(const Term& t);

}  // namespace binderkit

#endif
