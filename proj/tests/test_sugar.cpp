#include <doctest.h>

#include "binderkit/equality.hpp"
#include "binderkit/sugar.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace binderkit;

namespace {

const Sort u = Sort::unit();
const Syntax& with_let = utlc_let_syntax();

Term let_(Term bound, Term body) { return letsyn::let_(u, u, std::move(bound), std::move(body)); }
Term L(const Term& t) { return lift_sum_left(t); }

Counter annotated_tag(const Term& t) {
  return std::get<PayloadValue>(t.layer().events[1]).tag_index() == 0   ? Counter::Zero
         : std::get<PayloadValue>(t.layer().events[1]).tag_index() == 1 ? Counter::One
                                                                        : Counter::Many;
}

// Compares every annotated tag against a brute-force live-occurrence
// count of the bound variable in the annotated body, capped at many.
// Dead bound expressions never contribute, matching the control rule.
void check_tags_against_oracle(const Term& t) {
  if (t.is_var()) return;
  const auto& events = t.layer().events;
  bool left = std::get<PayloadValue>(events[0]).as_bool();
  std::size_t first_child = left ? 1 : 3;
  if (!left) {
    const Term& body = std::get<SubEvent<Term>>(events[4]).child;
    std::size_t n = oracles::live_occurrences(body, 0);
    Counter expected = n == 0 ? Counter::Zero : n == 1 ? Counter::One : Counter::Many;
    CHECK(annotated_tag(t) == expected);
  }
  for (std::size_t i = first_child; i < events.size(); ++i)
    if (std::holds_alternative<SubEvent<Term>>(events[i]))
      check_tags_against_oracle(std::get<SubEvent<Term>>(events[i]).child);
}

}  // namespace

TEST_CASE("the counter monoid, exhaustively") {
  using enum Counter;
  CHECK(counter_add(Zero, Zero) == Zero);
  CHECK(counter_add(Zero, One) == One);
  CHECK(counter_add(Zero, Many) == Many);
  CHECK(counter_add(One, Zero) == One);
  CHECK(counter_add(One, One) == Many);
  CHECK(counter_add(One, Many) == Many);
  CHECK(counter_add(Many, Zero) == Many);
  CHECK(counter_add(Many, One) == Many);
  CHECK(counter_add(Many, Many) == Many);
  // commutativity and associativity over the whole table
  for (Counter a : {Zero, One, Many})
    for (Counter b : {Zero, One, Many}) {
      CHECK(counter_add(a, b) == counter_add(b, a));
      for (Counter c : {Zero, One, Many})
        CHECK(counter_add(counter_add(a, b), c) == counter_add(a, counter_add(b, c)));
    }
}

TEST_CASE("count constructors and combinators") {
  CHECK(from_var(Var{1, u}, 3).entries ==
        std::vector<Counter>{Counter::Zero, Counter::One, Counter::Zero});
  Count k = from_var(Var{0, u}, 2);
  CHECK(merge(zeros(2), k) == k);
  CHECK(merge(k, zeros(2)) == k);
  CHECK(control(Counter::Many, k) == k);
  CHECK(control(Counter::One, k) == k);
  CHECK(control(Counter::Zero, k) == zeros(2));
  CHECK_THROWS_AS(merge(zeros(2), zeros(3)), Error);

  // merge is associative and commutative on small scopes
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + rng.below(3);
    auto random_count = [&]() {
      Count c = zeros(n);
      for (auto& e : c.entries)
        e = static_cast<Counter>(rng.below(3));
      return c;
    };
    Count a = random_count(), b = random_count(), c = random_count();
    CHECK(merge(a, b) == merge(b, a));
    CHECK(merge(merge(a, b), c) == merge(a, merge(b, c)));
  }
}

TEST_CASE("unlet substitutes the bound expression") {
  // let x = id in x  ~>  id
  Term t = let_(L(utlc::identity()), Term::var(Var{0, u}));
  CHECK(eq_term(utlc_desc(), unlet(utlc_desc(), Ctx(), t), utlc::identity()));

  // a let-free term comes back unchanged
  Term plain = L(utlc::app(utlc::identity(), utlc::v(0)));
  Term expected = utlc::app(utlc::identity(), utlc::v(0));
  CHECK(eq_term(utlc_desc(), unlet(utlc_desc(), Ctx({u}), plain), expected));

  // nested lets thread the environment: let x = w in let y = x in y  ~>  w
  Term w = utlc::lam(utlc::lam(utlc::v(1)));
  Term nested = let_(L(w), let_(Term::var(Var{0, u}), Term::var(Var{0, u})));
  CHECK(eq_term(utlc_desc(), unlet(utlc_desc(), Ctx(), nested), w));
}

TEST_CASE("unlet output never contains a let layer") {
  Rng rng(71);
  for (int i = 0; i < 300; ++i) {
    Rng sample = rng.fork(i);
    Ctx ctx = testutil::unit_ctx(1 + sample.below(2));
    Term t = testutil::must_gen(with_let, sample, ctx, u, 6);
    Term out = unlet(utlc_desc(), ctx, t);
    CHECK(validate(utlc_desc(), ctx, u, out).has_value());
  }
}

TEST_CASE("annotate tags the single-use let with one") {
  Term t = let_(L(utlc::identity()), Term::var(Var{0, u}));
  auto [annotated, count] = annotate(utlc_desc(), Ctx(), t);
  CHECK(annotated_tag(annotated) == Counter::One);
  CHECK(count == zeros(0));
}

TEST_CASE("annotate tags the double-use let with many") {
  Term t = let_(L(utlc::identity()), L(utlc::app(utlc::v(0), utlc::v(0))));
  auto [annotated, count] = annotate(utlc_desc(), Ctx(), t);
  CHECK(annotated_tag(annotated) == Counter::Many);
  (void)count;
}

TEST_CASE("annotate tags dead lets zero and erases their contribution") {
  // let x = (free variable in scope) in (λy. y): x unused, so the free
  // variable of the bound expression must not show up in the tally
  Ctx ctx({u});
  Term t = let_(Term::var(Var{0, u}), L(utlc::identity()));
  auto [annotated, count] = annotate(utlc_desc(), ctx, t);
  CHECK(annotated_tag(annotated) == Counter::Zero);
  CHECK(count == zeros(1));

  // with the variable used once, the contribution shows up
  Term used = let_(Term::var(Var{0, u}), Term::var(Var{0, u}));
  auto [annotated2, count2] = annotate(utlc_desc(), ctx, used);
  CHECK(annotated_tag(annotated2) == Counter::One);
  CHECK(count2.entries == std::vector<Counter>{Counter::One});
}

TEST_CASE("annotated counters agree with the occurrence oracle on random let-terms") {
  Rng rng(73);
  for (int i = 0; i < 400; ++i) {
    Rng sample = rng.fork(i);
    Ctx ctx = testutil::unit_ctx(1);
    Term t = testutil::must_gen(with_let, sample, ctx, u, 6);
    auto [annotated, count] = annotate(utlc_desc(), ctx, t);
    (void)count;
    check_tags_against_oracle(annotated);
  }
}

TEST_CASE("inline drops zero, substitutes one, keeps many") {
  // one: let x = id in x  ~>  id
  Term one_use = let_(L(utlc::identity()), Term::var(Var{0, u}));
  auto [a1, c1] = annotate(utlc_desc(), Ctx(), one_use);
  Term inlined1 = inline_lets(utlc_desc(), Ctx(), a1);
  CHECK(eq_term(sum(utlc_desc(), let_desc()), inlined1, L(utlc::identity())));

  // zero: let x = e in u  ~>  u, e discarded
  Ctx ctx({u});
  Term dead = let_(Term::var(Var{0, u}), L(utlc::identity()));
  auto [a2, c2] = annotate(utlc_desc(), ctx, dead);
  Term inlined2 = inline_lets(utlc_desc(), ctx, a2);
  CHECK(eq_term(sum(utlc_desc(), let_desc()), inlined2, L(utlc::identity())));

  // many: the binder survives with its counter erased
  Term shared = let_(L(utlc::identity()), L(utlc::app(utlc::v(0), utlc::v(0))));
  auto [a3, c3] = annotate(utlc_desc(), Ctx(), shared);
  Term inlined3 = inline_lets(utlc_desc(), Ctx(), a3);
  CHECK(oracles::let_layers(inlined3) == 1);
  CHECK(eq_term(sum(utlc_desc(), let_desc()), inlined3, shared));
}

TEST_CASE("clet_term round-trips through the annotated description") {
  Term t = clet_term(Counter::Many, u, u, L(utlc::identity()), Term::var(Var{0, u}));
  CHECK(validate(sum(utlc_desc(), clet_desc()), Ctx(), u, t).has_value());
}

TEST_CASE("the inlining pass never grows a term and preserves reachable manys") {
  Rng rng(79);
  Desc sum_let = sum(utlc_desc(), let_desc());
  for (int i = 0; i < 400; ++i) {
    Rng sample = rng.fork(i);
    Ctx ctx = testutil::unit_ctx(1);
    Term t = testutil::must_gen(with_let, sample, ctx, u, 6);
    auto [annotated, count] = annotate(utlc_desc(), ctx, t);
    (void)count;
    Term slim = inline_lets(utlc_desc(), ctx, annotated);
    CHECK(validate(sum_let, ctx, u, slim).has_value());
    CHECK(size(slim) <= size(t));
    CHECK(oracles::let_layers(slim) == oracles::reachable_many_lets(annotated));
  }
}
