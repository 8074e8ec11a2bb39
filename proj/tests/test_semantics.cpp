#include <doctest.h>

#include "binderkit/equality.hpp"
#include "binderkit/printing.hpp"
#include "binderkit/semantics.hpp"
#include "binderkit/syntactic.hpp"
#include "testutil.hpp"

using namespace binderkit;

namespace {
const Sort u = Sort::unit();
}

TEST_CASE("semantics on a variable is var after lookup") {
  SemanticsDef<int, int> s;
  s.th_v = [](int v, const Thinning&) { return v; };
  s.var = [](int v) { return v * 10; };
  s.alg = [](const Sort&, const Layer<Kripke<int, int>>&) -> int { return -1; };
  Env<int> rho = Env<int>::from_values(Ctx({u}), Ctx({u}), {4});
  CHECK(semantics(s, rho, u, Term::var(Var{0, u})) == 40);
}

TEST_CASE("body splits on the telescope") {
  // with an empty telescope we get the recursive result directly
  SemanticsDef<Var, Term> s = ren_semantics(utlc_desc());
  Ctx gamma({u});
  Kripke<Var, Term> leaf = body(s, identity_thinning(gamma), {}, u, Term::var(Var{0, u}));
  REQUIRE(leaf.is_leaf());
  CHECK(leaf.value().as_var() == Var{0, u});

  // with a binder, feeding the identity thinning and a value environment
  // resolves the newly bound variable to that value
  Kripke<Var, Term> binder = body(s, identity_thinning(gamma), {u}, u, Term::var(Var{0, u}));
  REQUIRE(!binder.is_leaf());
  Env<Var> vs = Env<Var>::from_values(Ctx({u}), gamma, {Var{0, u}});
  Term out = binder.run(identity_thinning(gamma), vs);
  CHECK(out.as_var() == Var{0, u});
}

TEST_CASE("body thins the captured environment before appending") {
  // a counting value family that records every thinning it absorbs
  struct Traced {
    Var var;
    int thinned;
  };
  SemanticsDef<Traced, int> s;
  s.th_v = [](const Traced& t, const Thinning& th) {
    return Traced{th.lookup(t.var), t.thinned + 1};
  };
  s.var = [](const Traced& t) { return t.thinned; };
  s.alg = [](const Sort&, const Layer<Kripke<Traced, int>>&) -> int { return -1; };

  Ctx gamma({u});
  Env<Traced> rho = Env<Traced>::from_values(gamma, gamma, {Traced{Var{0, u}, 0}});
  // evaluate the body of a binder that immediately uses the *old* variable
  Kripke<Traced, int> k = body(s, rho, {u}, u, Term::var(Var{1, u}));
  Env<Traced> vs = Env<Traced>::from_values(Ctx({u}), gamma, {Traced{Var{0, u}, 0}});
  CHECK(k.run(identity_thinning(gamma), vs) == 1);  // exactly one absorbed thinning
}

TEST_CASE("closed kickstarts with the empty environment") {
  Term id = utlc::identity();
  Term renamed = closed(ren_semantics(utlc_desc()), u, id);
  CHECK(eq_term(utlc_desc(), renamed, id));
}

TEST_CASE("reify with an empty telescope is the identity") {
  SemanticsDef<Var, Term> s = ren_semantics(utlc_desc());
  Kripke<Var, Term> leaf = body(s, identity_thinning(Ctx({u})), {}, u, Term::var(Var{0, u}));
  Term out = reify(vl_var(), {}, u, leaf);
  CHECK(out.as_var() == Var{0, u});
}

TEST_CASE("reify on a renaming body returns the renamed scope") {
  // under a binder, renaming with the identity must leave the bound
  // variable alone and the reified body equal to a direct renaming
  Ctx gamma({u});
  Term lam_body = utlc::app(utlc::v(0), utlc::v(1));
  SemanticsDef<Var, Term> s = ren_semantics(utlc_desc());
  Kripke<Var, Term> k = body(s, identity_thinning(gamma), {u}, u, lam_body);
  Term reified = reify(vl_var(), {u}, u, k);
  Term direct = ren(utlc_desc(), identity_thinning(Ctx({u, u})), lam_body);
  CHECK(eq_term(utlc_desc(), reified, direct));
}

TEST_CASE("reify with term placeholders feeds wrapped variables") {
  Ctx gamma;
  SemanticsDef<Term, Term> s = sub_semantics(utlc_desc());
  Term lam_body = utlc::v(0);
  Kripke<Term, Term> k = body(s, base(vl_tm(utlc_desc()), gamma), {u}, u, lam_body);
  Term reified = reify(vl_tm(utlc_desc()), {u}, u, k);
  REQUIRE(reified.is_var());
  CHECK(reified.as_var() == Var{0, u});
}

TEST_CASE("the algebra sees Kripkes exactly at the description's recursive positions") {
  // structural audit: an instrumented algebra replays the description and
  // checks the evaluated layer agrees with it event by event
  SemanticsDef<Var, Term> ren_s = ren_semantics(utlc_desc());
  SemanticsDef<Var, Term> audit = ren_s;
  int audited = 0;
  audit.alg = [&](const Sort& sort, const Layer<Kripke<Var, Term>>& layer) {
    Desc cursor = utlc_desc();
    for (const auto& ev : layer.events) {
      if (std::holds_alternative<PayloadValue>(ev)) {
        REQUIRE(cursor.kind() == Desc::Kind::Sigma);
        cursor = cursor.apply(std::get<PayloadValue>(ev));
      } else {
        REQUIRE(cursor.kind() == Desc::Kind::Rec);
        const auto& sub = std::get<SubEvent<Kripke<Var, Term>>>(ev);
        CHECK(sub.telescope == cursor.telescope());
        CHECK(sub.sort == cursor.rec_sort());
        CHECK(sub.child.is_leaf() == sub.telescope.empty());
        ++audited;
        cursor = cursor.rest();
      }
    }
    CHECK(cursor.kind() == Desc::Kind::Done);
    return ren_s.alg(sort, layer);
  };
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    Ctx ctx = testutil::unit_ctx(1 + rng.below(2));
    Term t = testutil::must_gen(utlc_syntax(), rng, ctx, u, 5);
    semantics(audit, identity_thinning(ctx), u, t);
  }
  CHECK(audited > 0);
}

TEST_CASE("shipped semantics run cleanly over generated terms of every syntax") {
  // renaming and substitution for each syntax; validity violations would
  // throw out of the environment machinery
  Rng rng(17);
  for (const Syntax* syntax : all_syntaxes()) {
    for (int i = 0; i < 1000; ++i) {
      Rng sample = rng.fork(i);
      auto [ctx, sort] = testutil::sample_ctx_and_sort(*syntax, sample);
      Term t = testutil::must_gen(*syntax, sample, ctx, sort, 5);
      Thinning th = testutil::sample_thinning(*syntax, sample, ctx);
      Term renamed = ren(syntax->desc, th, t);
      CHECK(validate(syntax->desc, th.target(), sort, renamed).has_value());
      Env<Term> rho = testutil::sample_term_env(*syntax, sample, ctx);
      Term substituted = sub(syntax->desc, rho, t);
      CHECK(validate(syntax->desc, rho.target(), sort, substituted).has_value());
    }
  }
}
