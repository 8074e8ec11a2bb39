#include "binderkit/relations.hpp"

#include "binderkit/printing.hpp"
#include "binderkit/syntactic.hpp"

namespace binderkit {

std::string PropReport::show() const {
  std::string out = name + ": " + (passed() ? "pass" : "FAIL") + " (" +
                    std::to_string(samples - failures) + "/" + std::to_string(samples) + ")";
  if (!note.empty()) out += " [" + note + "]";
  for (const auto& ce : counterexamples) out += "\n  counterexample " + ce;
  return out;
}

namespace {

// Random scopes, thinnings and environments for the two syntactic
// calculi. Extensions always contain the source scope, so every entry
// sort stays inhabitable by a variable.
struct Sampler {
  const Syntax& syntax;
  std::size_t depth;

  std::vector<Sort> sort_pool() const {
    if (syntax.name == "stlc") {
      std::vector<Sort> pool;
      for (const auto& t : enumerate_types(3)) pool.push_back(Sort::of_type(t));
      return pool;
    }
    return {Sort::unit()};
  }

  Ctx sample_ctx(Rng& rng) const {
    auto pool = sort_pool();
    std::vector<Sort> sorts;
    std::size_t n = 1 + rng.below(3);
    for (std::size_t i = 0; i < n; ++i) sorts.push_back(pool[rng.below(pool.size())]);
    return Ctx(std::move(sorts));
  }

  std::tuple<Ctx, Sort, Term> sample_term(Rng& rng) const {
    // the target sort comes from the scope itself, so a variable can
    // always inhabit it and generation cannot bottom out
    Ctx ctx = sample_ctx(rng);
    Sort sort = ctx[rng.below(ctx.size())];
    auto t = gen_term(syntax, rng, ctx, sort, depth);
    if (!t) throw Error("sampler: " + t.error().message);
    return {ctx, sort, t.value()};
  }

  /// A monotone injection from ctx into a scope with extra entries mixed in.
  Thinning sample_thinning(Rng& rng, const Ctx& ctx) const {
    auto pool = sort_pool();
    std::vector<Sort> target;
    std::vector<Var> image;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      std::size_t extra = rng.below(2);
      for (std::size_t k = 0; k < extra; ++k) target.push_back(pool[rng.below(pool.size())]);
      image.push_back(Var{target.size(), ctx[i]});
      target.push_back(ctx[i]);
    }
    std::size_t tail = rng.below(2);
    for (std::size_t k = 0; k < tail; ++k) target.push_back(pool[rng.below(pool.size())]);
    return Thinning::from_values(ctx, Ctx(std::move(target)), std::move(image));
  }

  /// A term environment over a sampled extension of ctx.
  Env<Term> sample_term_env(Rng& rng, const Ctx& ctx) const {
    Thinning shape = sample_thinning(rng, ctx);
    const Ctx& target = shape.target();
    std::vector<Term> entries;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      auto t = gen_term(syntax, rng, target, ctx[i], 3);
      if (!t) throw Error("sampler: " + t.error().message);
      entries.push_back(t.value());
    }
    return Env<Term>::from_values(ctx, target, std::move(entries));
  }

  std::string render(const Ctx& ctx, const Sort&, const Term& t) const {
    return print(syntax.desc, display_for(syntax), ctx, t) + "   in " + ctx.show();
  }
};

Rel<Term, Term> term_eq_rel(const Desc& d) {
  return [d](const Sort&, const Ctx&, const Term& a, const Term& b) { return eq_term(d, a, b); };
}

using SynSimulation = SimulationSpec<Var, Term, Term, Term>;

SynSimulation rensub_spec(const Syntax& syntax, std::size_t depth) {
  Sampler sampler{syntax, depth};
  const Desc d = syntax.desc;
  SynSimulation spec;
  spec.name = "rensub/" + syntax.name;
  spec.sa = ren_semantics(d);
  spec.sb = sub_semantics(d);
  spec.rel_v = [d](const Sort&, const Ctx&, const Var& a, const Term& b) {
    return eq_term(d, Term::var(a), b);
  };
  spec.rel_c = term_eq_rel(d);
  spec.sample_term = [sampler](Rng& rng) { return sampler.sample_term(rng); };
  spec.sample_envs = [sampler](Rng& rng, const Ctx& ctx) {
    Thinning th = sampler.sample_thinning(rng, ctx);
    Env<Term> as_terms = th.map([](const Var& v) { return Term::var(v); });
    return std::make_pair(th, as_terms);
  };
  spec.render = [sampler](const Ctx& ctx, const Sort& s, const Term& t) {
    return sampler.render(ctx, s, t);
  };
  return spec;
}

using SubSimulation = SimulationSpec<Term, Term, Term, Term>;

SubSimulation sub_extensionality_spec(const Syntax& syntax, std::size_t depth) {
  Sampler sampler{syntax, depth};
  const Desc d = syntax.desc;
  SubSimulation spec;
  spec.name = "sub-extensionality/" + syntax.name;
  spec.sa = sub_semantics(d);
  spec.sb = sub_semantics(d);
  spec.rel_v = term_eq_rel(d);
  spec.rel_c = term_eq_rel(d);
  spec.sample_term = [sampler](Rng& rng) { return sampler.sample_term(rng); };
  spec.sample_envs = [sampler](Rng& rng, const Ctx& ctx) {
    Env<Term> rho = sampler.sample_term_env(rng, ctx);
    // pointwise equal, differently represented: the second environment
    // re-wraps lookup behind another closure
    Env<Term> same(rho.source(), rho.target(), [rho](const Var& v) { return rho.unchecked(v); });
    return std::make_pair(rho, same);
  };
  spec.render = [sampler](const Ctx& ctx, const Sort& s, const Term& t) {
    return sampler.render(ctx, s, t);
  };
  return spec;
}

}  // namespace

std::vector<PropReport> run_simulation_suite(const SuiteConfig& config) {
  std::vector<PropReport> reports;
  for (const Syntax* syntax : {&utlc_syntax(), &stlc_syntax()}) {
    reports.push_back(
        check_simulation(rensub_spec(*syntax, config.depth), config.samples, config.seed));
    reports.push_back(check_simulation(sub_extensionality_spec(*syntax, config.depth),
                                       config.samples, config.seed));
  }
  return reports;
}

namespace {

using RenRenFusion = FusionSpec<Var, Term, Var, Term, Var, Term>;
using SubRenFusion = FusionSpec<Term, Term, Var, Term, Term, Term>;
using RenSubFusion = FusionSpec<Var, Term, Term, Term, Term, Term>;
using SubSubFusion = FusionSpec<Term, Term, Term, Term, Term, Term>;

template <typename Spec>
void common_fusion_fields(Spec& spec, const Syntax& syntax, const Sampler& sampler) {
  spec.rel_c = term_eq_rel(syntax.desc);
  spec.reify_a = [](const Term& t) { return t; };
  spec.sample_term = [sampler](Rng& rng) { return sampler.sample_term(rng); };
  spec.render = [sampler](const Ctx& ctx, const Sort& s, const Term& t) {
    return sampler.render(ctx, s, t);
  };
}

RenRenFusion renren_spec(const Syntax& syntax, std::size_t depth) {
  Sampler sampler{syntax, depth};
  const Desc d = syntax.desc;
  RenRenFusion spec;
  spec.name = "ren-then-ren/" + syntax.name;
  spec.sa = spec.sb = spec.sab = ren_semantics(d);
  common_fusion_fields(spec, syntax, sampler);
  spec.sample_envs = [sampler](Rng& rng, const Ctx& ctx) {
    Thinning a = sampler.sample_thinning(rng, ctx);
    Thinning b = sampler.sample_thinning(rng, a.target());
    Thinning ab = select(a, b);
    return std::make_tuple(a, b, ab);
  };
  return spec;
}

SubRenFusion subren_spec(const Syntax& syntax, std::size_t depth) {
  Sampler sampler{syntax, depth};
  const Desc d = syntax.desc;
  SubRenFusion spec;
  spec.name = "sub-then-ren/" + syntax.name;
  spec.sa = spec.sab = sub_semantics(d);
  spec.sb = ren_semantics(d);
  common_fusion_fields(spec, syntax, sampler);
  spec.sample_envs = [sampler, d](Rng& rng, const Ctx& ctx) {
    Env<Term> a = sampler.sample_term_env(rng, ctx);
    Thinning b = sampler.sample_thinning(rng, a.target());
    // the fused substitution carries the renaming applied pointwise
    Env<Term> ab(ctx, b.target(), [d, a, b](const Var& v) { return ren(d, b, a.unchecked(v)); });
    return std::make_tuple(a, b, ab);
  };
  return spec;
}

RenSubFusion rensubfuse_spec(const Syntax& syntax, std::size_t depth) {
  Sampler sampler{syntax, depth};
  const Desc d = syntax.desc;
  RenSubFusion spec;
  spec.name = "ren-then-sub/" + syntax.name;
  spec.sa = ren_semantics(d);
  spec.sb = spec.sab = sub_semantics(d);
  common_fusion_fields(spec, syntax, sampler);
  spec.sample_envs = [sampler](Rng& rng, const Ctx& ctx) {
    Thinning a = sampler.sample_thinning(rng, ctx);
    Env<Term> b = sampler.sample_term_env(rng, a.target());
    Env<Term> ab = select(a, b);
    return std::make_tuple(a, b, ab);
  };
  return spec;
}

SubSubFusion subsub_spec(const Syntax& syntax, std::size_t depth) {
  Sampler sampler{syntax, depth};
  const Desc d = syntax.desc;
  SubSubFusion spec;
  spec.name = "sub-then-sub/" + syntax.name;
  spec.sa = spec.sb = spec.sab = sub_semantics(d);
  common_fusion_fields(spec, syntax, sampler);
  spec.sample_envs = [sampler, d](Rng& rng, const Ctx& ctx) {
    Env<Term> a = sampler.sample_term_env(rng, ctx);
    Env<Term> b = sampler.sample_term_env(rng, a.target());
    Env<Term> ab(ctx, b.target(), [d, a, b](const Var& v) { return sub(d, b, a.unchecked(v)); });
    return std::make_tuple(a, b, ab);
  };
  return spec;
}

}  // namespace

std::vector<PropReport> run_fusion_suite(const SuiteConfig& config) {
  std::vector<PropReport> reports;
  for (const Syntax* syntax : {&utlc_syntax(), &stlc_syntax()}) {
    reports.push_back(check_fusion(renren_spec(*syntax, config.depth), config.samples, config.seed));
    reports.push_back(check_fusion(subren_spec(*syntax, config.depth), config.samples, config.seed));
    reports.push_back(
        check_fusion(rensubfuse_spec(*syntax, config.depth), config.samples, config.seed));
    reports.push_back(check_fusion(subsub_spec(*syntax, config.depth), config.samples, config.seed));
  }
  return reports;
}

namespace {

// Shifts every looked-up index one binder too far, clamped to stay in
// range; sort-safe on the untyped calculus only.
Thinning off_by_one(const Thinning& th) {
  return Thinning(th.source(), th.target(), [th](const Var& v) {
    Var w = th.unchecked(v);
    std::size_t last = th.target().size() - 1;
    return Var{w.index < last ? w.index + 1 : last, w.sort};
  });
}

}  // namespace

PropReport run_simulation_mutation_control(const SuiteConfig& config) {
  // a broken renaming implementation: its thinning action lands one
  // binder too far; the checker must notice within the sample budget
  const Syntax& syntax = utlc_syntax();
  SynSimulation spec = rensub_spec(syntax, config.depth);
  spec.name = "mutation-control/rensub-off-by-one";
  spec.sa.th_v = [](const Var& v, const Thinning& th) { return off_by_one(th).unchecked(v); };
  return check_simulation(spec, config.samples, config.seed);
}

PropReport run_fusion_mutation_control(const SuiteConfig& config) {
  const Syntax& syntax = utlc_syntax();
  RenRenFusion spec = renren_spec(syntax, config.depth);
  spec.name = "mutation-control/ren-ren-off-by-one";
  Sampler sampler{syntax, config.depth};
  spec.sample_envs = [sampler](Rng& rng, const Ctx& ctx) {
    Thinning a = sampler.sample_thinning(rng, ctx);
    Thinning b = sampler.sample_thinning(rng, a.target());
    Thinning ab = off_by_one(select(a, b));
    return std::make_tuple(a, b, ab);
  };
  return check_fusion(spec, config.samples, config.seed);
}

}  // namespace binderkit
