#ifndef BINDERKIT_BUILTIN_HPP
#define BINDERKIT_BUILTIN_HPP

#include <string>
#include <vector>

#include "binderkit/desc.hpp"
#include "binderkit/term.hpp"

namespace binderkit {

// The built-in descriptions. Each is a constant; the dependent
// continuations are opaque callables, so syntaxes are code, not data.
const Desc& utlc_desc();
const Desc& bidi_desc();
const Desc& stlc_desc();
const Desc& let_desc();
const Desc& clet_desc();
const Desc& clist_desc();

/// Everything the generic tooling needs to know about one syntax.
struct Syntax {
  std::string name;
  Desc desc;
  SortDomain sorts;
  Sort top_sort;           // sort at which source files are checked
  EnumerationHints hints;  // payload enumeration for generators/exploration
};

const Syntax& utlc_syntax();
const Syntax& bidi_syntax();
const Syntax& stlc_syntax();
const Syntax& utlc_let_syntax();  // sum(utlc, let)
const Syntax& clist_syntax();

const std::vector<const Syntax*>& all_syntaxes();
const Syntax* find_syntax(const std::string& name);

/// Splits a layer of a binary sum description into the chosen branch and
/// the remaining events.
template <typename X>
std::pair<bool, Layer<X>> split_sum_layer(const Layer<X>& layer) {
  if (layer.events.empty() || !std::holds_alternative<PayloadValue>(layer.events.front()))
    throw Error("split_sum_layer: layer does not start with a branch payload");
  const auto& pick = std::get<PayloadValue>(layer.events.front());
  Layer<X> rest;
  rest.events.assign(layer.events.begin() + 1, layer.events.end());
  return {pick.as_bool(), std::move(rest)};
}

/// Re-tags a layer as the left (or right) branch of a sum.
template <typename X>
Layer<X> inject_sum_layer(bool left, const Layer<X>& rest) {
  Layer<X> out;
  out.events.emplace_back(PayloadValue::boolean(left));
  out.events.insert(out.events.end(), rest.events.begin(), rest.events.end());
  return out;
}

/// Rewrites a term of `d` into the left branch of `sum(d, e)`, layer by
/// layer.
Term lift_sum_left(const Term& t);

// Constructor helpers per built-in syntax; they spell out the layer
// encodings once so the rest of the code can stay readable.
namespace utlc {
Term v(std::size_t index);
Term lam(Term body);
Term app(Term fn, Term arg);
Term identity();  // λx. x
}  // namespace utlc

namespace bidi {
Term v(std::size_t index, Sort mode = Sort::infer());
Term lam(Term body);
Term app(Term fn, Term arg);
Term emb(Term inferrable);
Term cut(Term checkable, SimpleType annotation);
}  // namespace bidi

namespace stlc {
Term v(std::size_t index, SimpleType type);
Term lam(SimpleType dom, SimpleType cod, Term body);
Term app(SimpleType dom, SimpleType cod, Term fn, Term arg);
}  // namespace stlc

namespace letsyn {
/// A let node in sum(d, let): binds `bound` (of sort `bound_sort`) in
/// `body` (of sort `body_sort`).
Term let_(Sort bound_sort, Sort body_sort, Term bound, Term body);
}  // namespace letsyn

namespace clist {
Term nil();
Term cons(std::uint64_t head, Term tail);
Term backptr(std::size_t index);
}  // namespace clist

}  // namespace binderkit

#endif
