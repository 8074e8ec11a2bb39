#include <doctest.h>

#include "binderkit/cyclic.hpp"
#include "binderkit/equality.hpp"
#include "testutil.hpp"

using namespace binderkit;

namespace {

const Sort u = Sort::unit();

Term zeroone_cycle() { return clist::cons(0, clist::cons(1, clist::backptr(1))); }
Term finite_01() { return clist::cons(0, clist::cons(1, clist::nil())); }

CoTree alternating(int bit) {
  return CoTree::defer([bit]() {
    CoLayer l;
    l.events.emplace_back(PayloadValue::boolean(false));
    l.events.emplace_back(PayloadValue::nat(static_cast<std::uint64_t>(bit)));
    l.events.emplace_back(CoSub{alternating(1 - bit)});
    return l;
  });
}

std::vector<std::uint64_t> spine(const CoTree& t, std::size_t depth) {
  std::vector<std::uint64_t> out;
  CoTree cursor = t;
  for (std::size_t i = 0; i < depth; ++i) {
    const auto& layer = cursor.force();
    if (std::get<PayloadValue>(layer.events[0]).as_bool()) break;
    out.push_back(std::get<PayloadValue>(layer.events[1]).as_nat());
    cursor = std::get<CoSub>(layer.events[2]).child;
  }
  return out;
}

/// Rebuilds a closed term from its unrolled top layer, re-embedding the
/// already-closed children under their original telescopes.
Term rebuild(const Desc& d, const Term& c) {
  Layer<Term> top = unroll(d, c);
  Layer<Term> out;
  std::size_t i = 0;
  const auto& orig = c.layer().events;
  for (const auto& ev : top.events) {
    if (std::holds_alternative<PayloadValue>(ev)) {
      out.events.emplace_back(std::get<PayloadValue>(ev));
      ++i;
      continue;
    }
    const auto& closed_child = std::get<SubEvent<Term>>(ev);
    const auto& shape = std::get<SubEvent<Term>>(orig[i]);
    Thinning embed(Ctx(), Ctx(shape.telescope), [](const Var& v) { return v; });
    out.events.emplace_back(SubEvent<Term>{
        shape.telescope, shape.sort, ren(d, embed, closed_child.child)});
    ++i;
  }
  return Term::con(std::move(out));
}

}  // namespace

TEST_CASE("plug replaces every free leaf by the closed term") {
  Term c = clist::nil();
  CHECK(eq_term(clist_desc(), plug(clist_desc(), c, Ctx({u}), Term::var(Var{0, u})), c));
  // a closed term has no leaves to fill
  Term t = finite_01();
  CHECK(eq_term(clist_desc(), plug(clist_desc(), c, Ctx(), t), t));
}

TEST_CASE("unroll exposes the top layer and re-plugs self references") {
  Term cyc = zeroone_cycle();
  Layer<Term> top = unroll(clist_desc(), cyc);
  REQUIRE(top.events.size() == 3);
  CHECK(std::get<PayloadValue>(top.events[1]).as_nat() == 0);
  // the tail is now closed: its back pointer got replaced by the whole cycle
  const Term& tail = std::get<SubEvent<Term>>(top.events[2]).child;
  CHECK(validate(clist_desc(), Ctx(), u, tail).has_value());

  Layer<Term> nil_top = unroll(clist_desc(), clist::nil());
  CHECK(nil_top.events.size() == 1);

  // plugging the body of the first cons cell with the cycle itself
  // reproduces the unrolled tail
  const auto& body = std::get<SubEvent<Term>>(cyc.layer().events[2]);
  Term replugged = plug(clist_desc(), cyc, Ctx(body.telescope), body.child);
  CHECK(eq_term(clist_desc(), replugged, tail));
}

TEST_CASE("unfolding the cycle yields the alternating spine") {
  CoTree t = unfold(clist_desc(), zeroone_cycle());
  CHECK(spine(t, 4) == std::vector<std::uint64_t>{0, 1, 0, 1});
}

TEST_CASE("finite lists unfold to themselves") {
  CoTree t = unfold(clist_desc(), finite_01());
  CHECK(spine(t, 10) == std::vector<std::uint64_t>{0, 1});
  FTree f = take_depth(t, 10);
  // 3 layers: two conses and the nil
  CHECK(f.payloads.size() == 2);
  REQUIRE(f.children.size() == 1);
  REQUIRE(f.children[0].children.size() == 1);
  CHECK(f.children[0].children[0].children.empty());
  CHECK(!f.children[0].children[0].truncated);

  CoTree n = unfold(clist_desc(), clist::nil());
  CHECK(spine(n, 5).empty());
}

TEST_CASE("take_depth marks where the depth ran out") {
  FTree f = take_depth(unfold(clist_desc(), zeroone_cycle()), 2);
  REQUIRE(f.children.size() == 1);
  REQUIRE(f.children[0].children.size() == 1);
  CHECK(f.children[0].children[0].truncated);
}

TEST_CASE("bounded bisimilarity at the golden depth") {
  auto r = bisim_depth(unfold(clist_desc(), zeroone_cycle()), alternating(0), 1000);
  CHECK(r.ok);
}

TEST_CASE("bisim_depth is reflexive and reports divergence paths") {
  CoTree t = unfold(clist_desc(), zeroone_cycle());
  CHECK(bisim_depth(t, t, 50).ok);
  CHECK(bisim_depth(t, t, 0).ok);  // depth zero is trivially yes

  auto wrong = bisim_depth(alternating(0), alternating(1), 5);
  REQUIRE(!wrong.ok);
  CHECK(wrong.path == std::vector<std::size_t>{1});  // heads differ immediately
}

TEST_CASE("bisim_depth is an equivalence at fixed depth on samples") {
  std::vector<CoTree> trees = {unfold(clist_desc(), zeroone_cycle()), alternating(0),
                               alternating(1), unfold(clist_desc(), finite_01())};
  for (const auto& a : trees) {
    CHECK(bisim_depth(a, a, 64).ok);
    for (const auto& b : trees) {
      CHECK(bisim_depth(a, b, 64).ok == bisim_depth(b, a, 64).ok);
      for (const auto& c : trees)
        if (bisim_depth(a, b, 64).ok && bisim_depth(b, c, 64).ok)
          CHECK(bisim_depth(a, c, 64).ok);
    }
  }
}

TEST_CASE("unroll-then-rebuild preserves the unfolding") {
  Rng rng(127);
  for (const Term& c : {zeroone_cycle(), finite_01(),
                        clist::cons(7, clist::backptr(0)),
                        clist::cons(2, clist::cons(3, clist::cons(4, clist::backptr(2))))}) {
    Term again = rebuild(clist_desc(), c);
    CHECK(validate(clist_desc(), Ctx(), u, again).has_value());
    CHECK(bisim_depth(unfold(clist_desc(), c), unfold(clist_desc(), again), 100).ok);
  }
  (void)rng;
}
