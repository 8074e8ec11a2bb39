#ifndef BINDERKIT_PRINTING_HPP
#define BINDERKIT_PRINTING_HPP

#include <string>
#include <utility>

#include "binderkit/builtin.hpp"
#include "binderkit/semantics.hpp"

namespace binderkit {

/// A deterministic stream of distinct names: a..z, a1..z1, a2..
class NameSupply {
 public:
  NameSupply() = default;

  std::pair<std::string, NameSupply> fresh() const {
    NameSupply rest;
    rest.next_ = next_ + 1;
    return {name_at(next_), rest};
  }

 private:
  static std::string name_at(std::size_t i) {
    std::string out(1, static_cast<char>('a' + i % 26));
    if (i / 26 > 0) out += std::to_string(i / 26);
    return out;
  }
  std::size_t next_ = 0;
};

/// A printed subterm: the names handed to its binders plus its rendering.
struct Pieces {
  std::vector<std::string> binder_names;
  std::string text;
};

/// How to render one layer, given the pieces of its subterms.
using Display = std::function<std::string(const Sort&, const Layer<Pieces>&)>;

/// Prints an open term: the free variables receive the first names from
/// the supply, in index order, then the term itself is rendered.
std::string print(const Desc& d, const Display& display, const Ctx& ctx, const Term& t);

Display utlc_display();

// Plumbing displays so every CLI syntax can be pretty-printed.
Display bidi_display();
Display stlc_display();
Display utlc_let_display();
Display clist_display();

/// The display used by the CLI for a named syntax.
const Display& display_for(const Syntax& syntax);

}  // namespace binderkit

#endif
