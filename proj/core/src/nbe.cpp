#include "binderkit/nbe.hpp"

namespace binderkit {

struct Dm::Node {
  Kind kind;
  std::optional<Var> var;
  std::optional<Layer<Kripke<Dm, Dm>>> layer;
};

Dm Dm::var(Var v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = std::move(v);
  return Dm(std::move(n));
}

Dm Dm::con(Layer<Kripke<Dm, Dm>> layer) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Con;
  n->layer = std::move(layer);
  return Dm(std::move(n));
}

Dm Dm::bot() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bot;
  return Dm(std::move(n));
}

Dm::Kind Dm::kind() const { return n_->kind; }

const Var& Dm::as_var() const {
  if (n_->kind != Kind::Var) throw Error("Dm::as_var on a non-variable");
  return *n_->var;
}

const Layer<Kripke<Dm, Dm>>& Dm::layer() const {
  if (n_->kind != Kind::Con) throw Error("Dm::layer on a non-constructor");
  return *n_->layer;
}

namespace {

Kripke<Dm, Dm> th_kripke(const Kripke<Dm, Dm>& k, const Thinning& th) {
  if (k.is_leaf()) return Kripke<Dm, Dm>::leaf(th.target(), th_dm(k.value(), th));
  return Kripke<Dm, Dm>::binder(
      th.target(), [k, th](const Thinning& sigma, const Env<Dm>& values) {
        return k.run(select(th, sigma), values);
      });
}

}  // namespace

Dm th_dm(const Dm& v, const Thinning& th) {
  switch (v.kind()) {
    case Dm::Kind::Var: return Dm::var(th.lookup(v.as_var()));
    case Dm::Kind::Bot: return v;
    case Dm::Kind::Con:
      return Dm::con(map_layer(v.layer(),
                               [&th](const std::vector<Sort>&, const Sort&,
                                     const Kripke<Dm, Dm>& k) { return th_kripke(k, th); }));
  }
  throw Error("th_dm: bad domain value");
}

VarLike<Dm> vl_dm() {
  VarLike<Dm> vl;
  vl.thin = [](const Dm& v, const Thinning& th) { return th_dm(v, th); };
  vl.fresh = [](const Sort& sort, const Ctx&) { return Dm::var(Var{0, sort}); };
  return vl;
}

Dm nbe(const Desc& d, const DmAlg& alg, const Env<Dm>& rho, const Sort& sort, const Term& t) {
  (void)d;
  SemanticsDef<Dm, Dm> s;
  s.th_v = th_dm;
  s.var = [](const Dm& v) { return v; };
  s.alg = alg;
  return semantics(s, rho, sort, t);
}

std::optional<Term> reify_dm(const Desc& d, const Dm& v, const Ctx& ctx, const Sort& sort) {
  (void)sort;
  switch (v.kind()) {
    case Dm::Kind::Bot: return std::nullopt;
    case Dm::Kind::Var: return Term::var(v.as_var());
    case Dm::Kind::Con: {
      Layer<Term> out;
      for (const auto& ev : v.layer().events) {
        if (std::holds_alternative<PayloadValue>(ev)) {
          out.events.emplace_back(std::get<PayloadValue>(ev));
          continue;
        }
        const auto& sub = std::get<SubEvent<Kripke<Dm, Dm>>>(ev);
        Dm under = reify(vl_dm(), sub.telescope, sub.sort, sub.child);
        auto child = reify_dm(d, under, ctx.extended(sub.telescope), sub.sort);
        if (!child) return std::nullopt;
        out.events.emplace_back(SubEvent<Term>{sub.telescope, sub.sort, std::move(*child)});
      }
      return Term::con(std::move(out));
    }
  }
  return std::nullopt;
}

Dm app_dm(const Dm& fn, const Dm& arg) {
  // fn is a lambda layer: run its body's Kripke on a singleton environment
  const auto& sub = std::get<SubEvent<Kripke<Dm, Dm>>>(fn.layer().events[1]);
  const Kripke<Dm, Dm>& body = sub.child;
  const Ctx& home = body.home();
  Env<Dm> extra = Env<Dm>::from_values(Ctx(sub.telescope), home, {arg});
  return body.run(identity_thinning(home), extra);
}

Dm utlc_alg(const Sort&, const Layer<Kripke<Dm, Dm>>& layer) {
  bool is_app = std::get<PayloadValue>(layer.events[0]).as_bool();
  if (is_app) {
    const Dm& fn = std::get<SubEvent<Kripke<Dm, Dm>>>(layer.events[1]).child.value();
    const Dm& arg = std::get<SubEvent<Kripke<Dm, Dm>>>(layer.events[2]).child.value();
    if (fn.kind() == Dm::Kind::Con &&
        !std::get<PayloadValue>(fn.layer().events[0]).as_bool()) {
      return app_dm(fn, arg);
    }
    // stuck application: rebuild the node as a value
    return Dm::con(layer);
  }
  return Dm::con(layer);
}

std::optional<Term> norm(const Desc& d, const DmAlg& alg, const Term& t, const Ctx& ctx) {
  Env<Dm> rho = base(vl_dm(), ctx);
  Dm value = nbe(d, alg, rho, sort_of(d, t), t);
  return reify_dm(d, value, ctx, sort_of(d, t));
}

}  // namespace binderkit
