#include "binderkit/syntactic.hpp"

namespace binderkit {

VarLike<Var> vl_var() {
  VarLike<Var> vl;
  vl.thin = [](const Var& v, const Thinning& th) { return th.lookup(v); };
  vl.fresh = [](const Sort& sort, const Ctx& ctx) {
    if (ctx.empty() || !(ctx[0] == sort))
      throw Error("vl_var: placeholder requested for a scope not headed by " + sort.show());
    return Var{0, sort};
  };
  return vl;
}

VarLike<Term> vl_tm(const Desc& d) {
  VarLike<Term> vl;
  vl.thin = [d](const Term& t, const Thinning& th) { return ren(d, th, t); };
  vl.fresh = [](const Sort& sort, const Ctx& ctx) {
    if (ctx.empty() || !(ctx[0] == sort))
      throw Error("vl_tm: placeholder requested for a scope not headed by " + sort.show());
    return Term::var(Var{0, sort});
  };
  return vl;
}

SemanticsDef<Var, Term> ren_semantics(const Desc& d) {
  SemanticsDef<Var, Term> s;
  s.th_v = [](const Var& v, const Thinning& th) { return th.lookup(v); };
  s.var = [](const Var& v) { return Term::var(v); };
  // rebuilding through fmap_layer keeps the description in the loop, so a
  // malformed layer surfaces as a loud shape error
  s.alg = [d](const Sort&, const Layer<Kripke<Var, Term>>& layer) {
    VarLike<Var> vl = vl_var();
    return Term::con(fmap_layer(
        d, [&vl](const std::vector<Sort>& telescope, const Sort& sort,
                 const Kripke<Var, Term>& k) { return reify(vl, telescope, sort, k); },
        layer));
  };
  return s;
}

Term ren(const Desc& d, const Thinning& th, const Term& t) {
  return semantics(ren_semantics(d), th, sort_of(d, t), t);
}

SemanticsDef<Term, Term> sub_semantics(const Desc& d) {
  SemanticsDef<Term, Term> s;
  s.th_v = [d](const Term& t, const Thinning& th) { return ren(d, th, t); };
  s.var = [](const Term& t) { return t; };
  s.alg = [d](const Sort&, const Layer<Kripke<Term, Term>>& layer) {
    VarLike<Term> vl = vl_tm(d);
    return Term::con(fmap_layer(
        d, [&vl](const std::vector<Sort>& telescope, const Sort& sort,
                 const Kripke<Term, Term>& k) { return reify(vl, telescope, sort, k); },
        layer));
  };
  return s;
}

Term sub(const Desc& d, const Env<Term>& rho, const Term& t) {
  return semantics(sub_semantics(d), rho, sort_of(d, t), t);
}

}  // namespace binderkit
