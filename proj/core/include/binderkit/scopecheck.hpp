#ifndef BINDERKIT_SCOPECHECK_HPP
#define BINDERKIT_SCOPECHECK_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "binderkit/term.hpp"

namespace binderkit {

/// Where a raw token came from; carried through scope checking so errors
/// can point back into the source.
struct SourcePos {
  int line = 0;
  int col = 0;
};

struct RawSub;
using RawEvent = std::variant<PayloadValue, RawSub>;

/// A name-based term fresh out of the parser: a named variable, or a
/// layer whose substructures carry the names of the variables they bind.
class RawTerm {
 public:
  static RawTerm var(std::string name, SourcePos pos);
  static RawTerm con(std::vector<RawEvent> events, SourcePos pos);

  bool is_var() const;
  const std::string& name() const;
  const std::vector<RawEvent>& events() const;
  const SourcePos& pos() const;

 private:
  struct Node;
  explicit RawTerm(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

/// A raw substructure: the names it binds plus the subterm.
struct RawSub {
  std::vector<std::string> binder_names;
  RawTerm child;
};

struct ScopeError {
  enum class Kind { OutOfScope, WrongSort, ShapeMismatch };
  Kind kind;
  std::string name;               // offending variable, when applicable
  std::optional<Sort> expected;   // WrongSort only
  SourcePos pos;
  std::string message;

  std::string show() const;
};

/// Resolves a name against the scope: first (innermost) match wins; a
/// match at the wrong sort is its own error.
Result<Var, ScopeError> to_var(const std::string& name, const Sort& sort,
                               const std::vector<std::string>& names, const Ctx& ctx,
                               const SourcePos& pos);

/// Scope checking: lifts variable resolution to whole terms. Binder names
/// come into scope just in time for the substructure that binds them.
Result<Term, ScopeError> to_tm(const Desc& d, const std::vector<std::string>& names,
                               const Ctx& ctx, const Sort& sort, const RawTerm& raw);

/// The inverse direction used by round-trip tests and by the CLI when
/// re-rendering internal terms: every binder gets a distinct generated
/// name (x0, x1, ...), free variables resolve through `names`, which must
/// therefore avoid the generated xN shapes.
RawTerm to_raw(const Desc& d, const std::vector<std::string>& names, const Term& t);

}  // namespace binderkit

#endif
