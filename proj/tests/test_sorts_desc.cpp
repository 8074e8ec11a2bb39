#include <doctest.h>

#include "binderkit/builtin.hpp"
#include "binderkit/desc.hpp"

using namespace binderkit;

TEST_CASE("sort domains decide an equivalence and round-trip their encoding") {
  for (const SortDomain* dom :
       {&unit_sort_domain(), &mode_sort_domain(), &type_sort_domain()}) {
    auto samples = dom->enumerate(4);
    REQUIRE(!samples.empty());
    for (const auto& a : samples) {
      CHECK(dom->eq(a, a));
      auto back = dom->decode(dom->encode(a));
      REQUIRE(back.has_value());
      CHECK(dom->eq(a, *back));
      for (const auto& b : samples) {
        CHECK(dom->eq(a, b) == dom->eq(b, a));
        for (const auto& c : samples)
          if (dom->eq(a, b) && dom->eq(b, c)) CHECK(dom->eq(a, c));
      }
    }
  }
}

TEST_CASE("type enumeration is size-bounded and duplicate-free") {
  auto types = enumerate_types(5);
  CHECK(types.size() == 4);  // alpha, a->a, a->(a->a), (a->a)->a
  for (const auto& t : types) CHECK(t.node_count() <= 5);
  for (std::size_t i = 0; i < types.size(); ++i)
    for (std::size_t j = i + 1; j < types.size(); ++j) CHECK(types[i] != types[j]);
}

TEST_CASE("payload_eq decides equality and rejects foreign values") {
  CHECK(payload_eq(PayloadDomain::nat(), PayloadValue::nat(3), PayloadValue::nat(3)));
  CHECK_FALSE(payload_eq(PayloadDomain::nat(), PayloadValue::nat(3), PayloadValue::nat(4)));

  PayloadDomain counter = PayloadDomain::tag({"zero", "one", "many"});
  CHECK_FALSE(payload_eq(counter, PayloadValue::tag(1, "one"), PayloadValue::tag(2, "many")));

  SimpleType alpha = SimpleType::alpha();
  SimpleType arr = SimpleType::arrow(alpha, alpha);
  PayloadDomain paird = PayloadDomain::pair(PayloadDomain::sort(), PayloadDomain::sort());
  PayloadValue p = PayloadValue::pair(PayloadValue::sort(Sort::of_type(alpha)),
                                      PayloadValue::sort(Sort::of_type(arr)));
  CHECK(payload_eq(paird, p, p));

  CHECK_THROWS_AS(payload_eq(PayloadDomain::nat(), PayloadValue::boolean(true),
                             PayloadValue::nat(0)),
                  Error);
}

TEST_CASE("payload_eq is an equivalence on enumerated values") {
  EnumerationHints hints;
  hints.nat_bound = 2;
  hints.sorts = {Sort::unit(), Sort::of_type(SimpleType::alpha())};
  for (const PayloadDomain& dom :
       {PayloadDomain::boolean(), PayloadDomain::nat(), PayloadDomain::sort(),
        PayloadDomain::tag({"a", "b"}),
        PayloadDomain::pair(PayloadDomain::boolean(), PayloadDomain::nat())}) {
    auto values = enumerate_payloads(dom, hints);
    for (const auto& a : values) {
      CHECK(payload_eq(dom, a, a));
      for (const auto& b : values) {
        CHECK(payload_eq(dom, a, b) == payload_eq(dom, b, a));
        for (const auto& c : values)
          if (payload_eq(dom, a, b) && payload_eq(dom, b, c)) CHECK(payload_eq(dom, a, c));
      }
    }
  }
}

TEST_CASE("every built-in description path terminates in Done") {
  EnumerationHints hints;
  hints.nat_bound = 4;
  for (const auto& t : enumerate_types(4)) hints.sorts.push_back(Sort::of_type(t));
  hints.sorts.push_back(Sort::unit());
  for (const Desc* d : {&utlc_desc(), &bidi_desc(), &stlc_desc(), &let_desc(), &clet_desc(),
                        &clist_desc()}) {
    auto paths = explore(*d, hints);
    CHECK(!paths.empty());  // explore throws if any path fails to reach Done
  }
}

TEST_CASE("sum picks the left branch on true and dispatches right on false") {
  Desc s = sum(utlc_desc(), let_desc());
  Desc left = s.apply(PayloadValue::boolean(true));
  Desc right = s.apply(PayloadValue::boolean(false));
  CHECK(left.kind() == Desc::Kind::Sigma);     // utlc starts with its own tag
  CHECK(left.domain().kind() == PayloadDomain::Kind::Bool);
  CHECK(right.kind() == Desc::Kind::Sigma);    // let starts with the type pair
  CHECK(right.domain().kind() == PayloadDomain::Kind::Pair);
}

namespace {

// Re-associating the selector tags of a nested sum: each leaf is reached
// by a known prefix of booleans; the fingerprint names the leaf and keeps
// everything after the prefix.
std::string leaf_fingerprint(const DescPath& path,
                             const std::vector<std::pair<std::vector<bool>, std::string>>& leaves) {
  for (const auto& [prefix, name] : leaves) {
    if (path.payloads.size() < prefix.size()) continue;
    bool match = true;
    for (std::size_t i = 0; i < prefix.size(); ++i)
      if (path.payloads[i].kind() != PayloadValue::Kind::Bool ||
          path.payloads[i].as_bool() != prefix[i]) {
        match = false;
        break;
      }
    if (!match) continue;
    std::string out = name + ":";
    for (std::size_t i = prefix.size(); i < path.payloads.size(); ++i)
      out += path.payloads[i].show() + ";";
    out += "|";
    for (const auto& [tele, sort] : path.recs) {
      out += "{";
      for (const auto& s : tele) out += s.show() + ",";
      out += "}" + sort.show() + ";";
    }
    return out + "|" + path.done.show();
  }
  return "?unclassified";
}

}  // namespace

TEST_CASE("sum is associative up to re-association of the selector tags") {
  const Desc& a = utlc_desc();
  const Desc& b = let_desc();
  const Desc& c = clist_desc();
  Desc lhs = sum(sum(a, b), c);
  Desc rhs = sum(a, sum(b, c));
  EnumerationHints hints;
  hints.nat_bound = 1;
  hints.sorts = {Sort::unit()};
  auto lhs_paths = explore(lhs, hints);
  auto rhs_paths = explore(rhs, hints);
  REQUIRE(lhs_paths.size() == rhs_paths.size());
  std::vector<std::string> lf, rf;
  for (const auto& p : lhs_paths)
    lf.push_back(leaf_fingerprint(p, {{{true, true}, "a"}, {{true, false}, "b"}, {{false}, "c"}}));
  for (const auto& p : rhs_paths)
    rf.push_back(leaf_fingerprint(p, {{{true}, "a"}, {{false, true}, "b"}, {{false, false}, "c"}}));
  std::sort(lf.begin(), lf.end());
  std::sort(rf.begin(), rf.end());
  CHECK(lf == rf);
  for (const auto& f : lf) CHECK(f != "?unclassified");
}

TEST_CASE("sum of a description with itself validates the same stripped layers") {
  EnumerationHints hints;
  hints.nat_bound = 1;
  hints.sorts = {Sort::unit()};
  auto doubled = explore(sum(utlc_desc(), utlc_desc()), hints);
  auto plain = explore(utlc_desc(), hints);
  REQUIRE(doubled.size() == 2 * plain.size());
  auto stripped = [](const DescPath& p) {
    DescPath q = p;
    q.payloads.erase(q.payloads.begin());
    return leaf_fingerprint(q, {{{}, "d"}});
  };
  std::vector<std::string> left, right, base;
  for (const auto& p : doubled)
    (p.payloads[0].as_bool() ? left : right).push_back(stripped(p));
  for (const auto& p : plain) base.push_back(leaf_fingerprint(p, {{{}, "d"}}));
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  std::sort(base.begin(), base.end());
  CHECK(left == base);
  CHECK(right == base);
}

TEST_CASE("sum layers dispatch by their boolean tag") {
  Term lifted = lift_sum_left(utlc::identity());
  auto [left, rest] = split_sum_layer(lifted.layer());
  CHECK(left);
  CHECK(rest.events.size() == utlc::identity().layer().events.size());

  Term let_node = letsyn::let_(Sort::unit(), Sort::unit(), lift_sum_left(utlc::identity()),
                               Term::var(Var{0, Sort::unit()}));
  auto [is_left, let_rest] = split_sum_layer(let_node.layer());
  CHECK_FALSE(is_left);
  CHECK(let_rest.events.size() == 3);
}
