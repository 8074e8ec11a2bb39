#ifndef BINDERKIT_RELATIONS_HPP
#define BINDERKIT_RELATIONS_HPP

#include <tuple>

#include "binderkit/equality.hpp"
#include "binderkit/gen.hpp"
#include "binderkit/semantics.hpp"

namespace binderkit {

/// A scoped relation between two value families.
template <typename A, typename B>
using Rel = std::function<bool(const Sort&, const Ctx&, const A&, const B&)>;

/// Pointwise lifting to environments sharing a source scope.
template <typename VA, typename VB>
bool all_env(const Rel<VA, VB>& r, const Env<VA>& a, const Env<VB>& b) {
  if (a.source() != b.source()) return false;
  const Ctx& src = a.source();
  for (std::size_t i = 0; i < src.size(); ++i) {
    Var v{i, src[i]};
    if (!r(src[i], a.target(), a.lookup(v), b.lookup(v))) return false;
  }
  return true;
}

/// Structurally equal layers whose substructures are themselves related;
/// substructures are compared in their telescope-extended scopes.
template <typename XA, typename XB>
bool zip_layer(const Desc& d, const Rel<XA, XB>& r, const Ctx& ctx, const Layer<XA>& a,
               const Layer<XB>& b) {
  Desc cursor = d;
  std::size_t i = 0;
  for (;; ++i) {
    if (cursor.kind() == Desc::Kind::Done)
      return i == a.events.size() && i == b.events.size();
    if (i >= a.events.size() || i >= b.events.size()) return false;
    if (cursor.kind() == Desc::Kind::Sigma) {
      if (!std::holds_alternative<PayloadValue>(a.events[i]) ||
          !std::holds_alternative<PayloadValue>(b.events[i]))
        return false;
      const auto& pa = std::get<PayloadValue>(a.events[i]);
      const auto& pb = std::get<PayloadValue>(b.events[i]);
      if (!payload_eq(cursor.domain(), pa, pb)) return false;
      cursor = cursor.apply(pa);
    } else {
      if (!std::holds_alternative<SubEvent<XA>>(a.events[i]) ||
          !std::holds_alternative<SubEvent<XB>>(b.events[i]))
        return false;
      const auto& sa = std::get<SubEvent<XA>>(a.events[i]);
      const auto& sb = std::get<SubEvent<XB>>(b.events[i]);
      if (sa.telescope != sb.telescope || sa.sort != sb.sort) return false;
      if (!r(sa.sort, ctx.extended(sa.telescope), sa.child, sb.child)) return false;
      cursor = cursor.rest();
    }
  }
}

/// Sampled stand-in for the Kripke relator: related inputs must go to
/// related outputs, instantiated at the identity thinning plus sampled
/// ones, with related value environments produced by the caller.
template <typename VA, typename CA, typename VB, typename CB>
struct KripkeRelConfig {
  Rel<CA, CB> rel_c;
  std::function<Thinning(Rng&, const Ctx& home)> sample_thinning;
  std::function<std::pair<Env<VA>, Env<VB>>(Rng&, const std::vector<Sort>&, const Ctx& target)>
      related_values;
  std::size_t samples = 8;
};

template <typename VA, typename CA, typename VB, typename CB>
bool kripke_rel_sampled(const KripkeRelConfig<VA, CA, VB, CB>& cfg,
                        const std::vector<Sort>& telescope, const Sort& sort,
                        const Kripke<VA, CA>& ka, const Kripke<VB, CB>& kb, Rng& rng) {
  if (ka.is_leaf() != kb.is_leaf()) return false;
  if (ka.is_leaf()) return cfg.rel_c(sort, ka.home(), ka.value(), kb.value());
  if (ka.home() != kb.home()) return false;
  for (std::size_t i = 0; i <= cfg.samples; ++i) {
    // the identity thinning is always among the instantiations
    Thinning th = i == 0 ? identity_thinning(ka.home()) : cfg.sample_thinning(rng, ka.home());
    auto [va, vb] = cfg.related_values(rng, telescope, th.target());
    if (!cfg.rel_c(sort, th.target(), ka.run(th, va), kb.run(th, vb))) return false;
  }
  return true;
}

/// Outcome of one sampled law check.
struct PropReport {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // first few, rendered for triage
  std::string note;                          // soundness caveats of the sampling

  bool passed() const { return failures == 0; }
  std::string show() const;
};

/// One semantics simulating another: related environments must yield
/// related computations. Samplers produce only valid inputs; environment
/// pairs are related by construction.
template <typename VA, typename CA, typename VB, typename CB>
struct SimulationSpec {
  std::string name;
  SemanticsDef<VA, CA> sa;
  SemanticsDef<VB, CB> sb;
  Rel<VA, VB> rel_v;
  Rel<CA, CB> rel_c;
  std::function<std::tuple<Ctx, Sort, Term>(Rng&)> sample_term;
  std::function<std::pair<Env<VA>, Env<VB>>(Rng&, const Ctx&)> sample_envs;
  std::function<std::string(const Ctx&, const Sort&, const Term&)> render;
};

template <typename VA, typename CA, typename VB, typename CB>
PropReport check_simulation(const SimulationSpec<VA, CA, VB, CB>& spec, std::size_t n_terms,
                            std::uint64_t seed) {
  PropReport report;
  report.name = spec.name;
  report.note = "sampled check, not a proof";
  Rng root(seed);
  for (std::size_t i = 0; i < n_terms; ++i) {
    Rng rng = root.fork(i);
    auto [ctx, sort, term] = spec.sample_term(rng);
    auto [rho_a, rho_b] = spec.sample_envs(rng, ctx);
    ++report.samples;
    // environments are built related; verify the sampler kept its word
    if (!all_env(spec.rel_v, rho_a, rho_b)) {
      ++report.failures;
      if (report.counterexamples.size() < 3)
        report.counterexamples.push_back("sample " + std::to_string(i) +
                                         ": environments are not related");
      continue;
    }
    CA ca = semantics(spec.sa, rho_a, sort, term);
    CB cb = semantics(spec.sb, rho_b, sort, term);
    if (!spec.rel_c(sort, rho_a.target(), ca, cb)) {
      ++report.failures;
      if (report.counterexamples.size() < 3)
        report.counterexamples.push_back("sample " + std::to_string(i) + ": " +
                                         spec.render(ctx, sort, term));
    }
  }
  return report;
}

/// Two semantics run in sequence being subsumed by a third. The first
/// run's result is brought back to syntax by `reify_a`; the environment
/// triple is generated so the instance's compatibility relation holds by
/// construction.
template <typename VA, typename CA, typename VB, typename CB, typename VAB, typename CAB>
struct FusionSpec {
  std::string name;
  SemanticsDef<VA, CA> sa;
  SemanticsDef<VB, CB> sb;
  SemanticsDef<VAB, CAB> sab;
  std::function<Term(const CA&)> reify_a;
  Rel<CB, CAB> rel_c;
  std::function<std::tuple<Ctx, Sort, Term>(Rng&)> sample_term;
  std::function<std::tuple<Env<VA>, Env<VB>, Env<VAB>>(Rng&, const Ctx&)> sample_envs;
  std::function<std::string(const Ctx&, const Sort&, const Term&)> render;
};

template <typename VA, typename CA, typename VB, typename CB, typename VAB, typename CAB>
PropReport check_fusion(const FusionSpec<VA, CA, VB, CB, VAB, CAB>& spec, std::size_t n_terms,
                        std::uint64_t seed) {
  PropReport report;
  report.name = spec.name;
  report.note = "sampled check: universally quantified statements are instantiated at random";
  Rng root(seed);
  for (std::size_t i = 0; i < n_terms; ++i) {
    Rng rng = root.fork(i);
    auto [ctx, sort, term] = spec.sample_term(rng);
    auto [rho_a, rho_b, rho_ab] = spec.sample_envs(rng, ctx);
    Term mid = spec.reify_a(semantics(spec.sa, rho_a, sort, term));
    CB cb = semantics(spec.sb, rho_b, sort, mid);
    CAB cab = semantics(spec.sab, rho_ab, sort, term);
    ++report.samples;
    if (!spec.rel_c(sort, rho_b.target(), cb, cab)) {
      ++report.failures;
      if (report.counterexamples.size() < 3)
        report.counterexamples.push_back("sample " + std::to_string(i) + ": " +
                                         spec.render(ctx, sort, term));
    }
  }
  return report;
}

struct SuiteConfig {
  std::size_t samples = 1000;
  std::size_t depth = 8;
  std::uint64_t seed = 42;
};

/// The standard instances, each run for both the untyped and the
/// annotated calculus: renaming as a special case of substitution, and
/// substitution extensionality.
std::vector<PropReport> run_simulation_suite(const SuiteConfig& config);

/// The four renaming/substitution fusions for both calculi.
std::vector<PropReport> run_fusion_suite(const SuiteConfig& config);

/// Deliberately broken instances: a correct checker must flag them.
PropReport run_simulation_mutation_control(const SuiteConfig& config);
PropReport run_fusion_mutation_control(const SuiteConfig& config);

}  // namespace binderkit

#endif
