#ifndef BINDERKIT_SEMANTICS_HPP
#define BINDERKIT_SEMANTICS_HPP

#include <functional>

#include "binderkit/scope.hpp"
#include "binderkit/term.hpp"

namespace binderkit {

/// The bundle driving one generic traversal: how to push values under a
/// binder, how a variable's value becomes a computation, and the algebra
/// combining one evaluated layer into a computation. The algebra receives
/// the node's sort explicitly; an index a dependently typed host would
/// carry for free has to travel as data here.
template <typename V, typename C>
struct SemanticsDef {
  std::function<V(const V&, const Thinning&)> th_v;
  std::function<C(const V&)> var;
  std::function<C(const Sort&, const Layer<Kripke<V, C>>&)> alg;
};

template <typename V, typename C>
C semantics(const SemanticsDef<V, C>& s, const Env<V>& rho, const Sort& sort, const Term& t);

/// Turns a syntactic binder into a semantic one: a substructure under a
/// telescope becomes a function of any scope extension plus values for the
/// newly bound variables.
template <typename V, typename C>
Kripke<V, C> body(const SemanticsDef<V, C>& s, const Env<V>& rho,
                  const std::vector<Sort>& telescope, const Sort& sort, const Term& scope_term) {
  if (telescope.empty())
    return Kripke<V, C>::leaf(rho.target(), semantics(s, rho, sort, scope_term));
  return Kripke<V, C>::binder(
      rho.target(), [s, rho, sort, scope_term](const Thinning& th, const Env<V>& values) -> C {
        auto thinned = thin_env(s.th_v, rho, th);
        return semantics(s, append(thinned, values), sort, scope_term);
      });
}

/// The fundamental traversal: an environment of values turns a term into
/// a computation.
template <typename V, typename C>
C semantics(const SemanticsDef<V, C>& s, const Env<V>& rho, const Sort& sort, const Term& t) {
  if (t.is_var()) return s.var(rho.lookup(t.as_var()));
  Layer<Kripke<V, C>> evaluated = map_layer(
      t.layer(), [&](const std::vector<Sort>& telescope, const Sort& sub_sort, const Term& sub) {
        return body(s, rho, telescope, sub_sort, sub);
      });
  return s.alg(sort, evaluated);
}

/// Evaluation of a closed term, kickstarted with the empty environment.
template <typename V, typename C>
C closed(const SemanticsDef<V, C>& s, const Sort& sort, const Term& t) {
  return semantics(s, Env<V>::empty(Ctx()), sort, t);
}

/// Reifies a semantic binder back into a computation living under its
/// telescope, by feeding placeholder values for the fresh variables.
template <typename V, typename C>
C reify(const VarLike<V>& vl, const std::vector<Sort>& telescope, const Sort& sort,
        const Kripke<V, C>& k) {
  (void)sort;
  if (k.is_leaf()) return k.value();
  const Ctx& home = k.home();
  // thinning embedding the home scope under the telescope, and placeholder
  // values for the telescope itself
  Thinning embed = weaken_many(telescope, home);
  std::vector<Sort> home_sorts;
  for (std::size_t i = 0; i < home.size(); ++i) home_sorts.push_back(home[i]);
  Env<V> placeholders = fresh_l(vl, Ctx(telescope), home_sorts);
  return k.run(embed, placeholders);
}

}  // namespace binderkit

#endif
