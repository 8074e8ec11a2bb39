#include "binderkit/sugar.hpp"

namespace binderkit {

Counter counter_add(Counter a, Counter b) {
  if (a == Counter::Zero) return b;
  if (b == Counter::Zero) return a;
  return Counter::Many;
}

const char* counter_label(Counter c) {
  switch (c) {
    case Counter::Zero: return "zero";
    case Counter::One: return "one";
    case Counter::Many: return "many";
  }
  return "?";
}

Count zeros(std::size_t scope_size) {
  return Count{std::vector<Counter>(scope_size, Counter::Zero)};
}

Count from_var(const Var& v, std::size_t scope_size) {
  if (v.index >= scope_size) throw Error("from_var: variable outside the scope");
  Count c = zeros(scope_size);
  c.entries[v.index] = Counter::One;
  return c;
}

Count merge(const Count& a, const Count& b) {
  if (a.entries.size() != b.entries.size())
    throw Error("merge: counts cover scopes of different sizes");
  Count out = a;
  for (std::size_t i = 0; i < out.entries.size(); ++i)
    out.entries[i] = counter_add(out.entries[i], b.entries[i]);
  return out;
}

Count control(Counter c, const Count& k) {
  if (c == Counter::Zero) return zeros(k.entries.size());
  return k;
}

namespace {

Counter counter_of_tag(const PayloadValue& tag) {
  switch (tag.tag_index()) {
    case 0: return Counter::Zero;
    case 1: return Counter::One;
    default: return Counter::Many;
  }
}

PayloadValue tag_of_counter(Counter c) {
  switch (c) {
    case Counter::Zero: return PayloadValue::tag(0, "zero");
    case Counter::One: return PayloadValue::tag(1, "one");
    case Counter::Many: return PayloadValue::tag(2, "many");
  }
  throw Error("tag_of_counter: bad counter");
}

}  // namespace

Term clet_term(Counter c, Sort bound_sort, Sort body_sort, Term bound, Term body) {
  Layer<Term> l;
  l.events.emplace_back(PayloadValue::boolean(false));
  l.events.emplace_back(tag_of_counter(c));
  l.events.emplace_back(
      PayloadValue::pair(PayloadValue::sort(bound_sort), PayloadValue::sort(body_sort)));
  l.events.emplace_back(SubEvent<Term>{{}, bound_sort, std::move(bound)});
  l.events.emplace_back(SubEvent<Term>{{bound_sort}, body_sort, std::move(body)});
  return Term::con(std::move(l));
}

Term unlet(const Desc& d, const Ctx& ctx, const Term& t) {
  Desc with_let = sum(d, let_desc());
  SemanticsDef<Term, Term> s;
  s.th_v = [d](const Term& v, const Thinning& th) { return ren(d, th, v); };
  s.var = [](const Term& v) { return v; };
  s.alg = [d](const Sort&, const Layer<Kripke<Term, Term>>& layer) -> Term {
    auto [left, rest] = split_sum_layer(layer);
    if (left) {
      // an old constructor: interpret with the substitution algebra
      VarLike<Term> vl = vl_tm(d);
      return Term::con(map_layer(rest, [&vl](const std::vector<Sort>& telescope, const Sort& sort,
                                             const Kripke<Term, Term>& k) {
        return reify(vl, telescope, sort, k);
      }));
    }
    // the let node provides the extra value for its body's environment
    const auto& bound_ev = std::get<SubEvent<Kripke<Term, Term>>>(rest.events[1]);
    const auto& body_ev = std::get<SubEvent<Kripke<Term, Term>>>(rest.events[2]);
    Term bound = bound_ev.child.value();
    const Kripke<Term, Term>& body = body_ev.child;
    const Ctx& home = body.home();
    Env<Term> extra =
        Env<Term>::from_values(Ctx(body_ev.telescope), home, {bound});
    return body.run(identity_thinning(home), extra);
  };
  return semantics(s, base(vl_tm(d), ctx), sort_of(with_let, t), t);
}

namespace {

// Values of the counting semantics: a variable together with the size of
// the scope it lives in, so tallies can be allocated without type-level
// indices.
struct ScopedVar {
  Var var;
  std::size_t scope_size;
};

// A tally that may be "all zeros, any width": payload-only layers have no
// children to read a scope width from, so absence stands for zeros.
using LazyCount = std::optional<Count>;

struct CountedTerm {
  Term term;
  LazyCount count;
};

LazyCount merge_lazy(const LazyCount& a, const LazyCount& b) {
  if (!a) return b;
  if (!b) return a;
  return merge(*a, *b);
}

LazyCount control_lazy(Counter c, const LazyCount& k) {
  if (c == Counter::Zero) return std::nullopt;
  return k;
}

LazyCount drop_rows(const LazyCount& c, std::size_t rows) {
  if (!c) return std::nullopt;
  return Count{std::vector<Counter>(c->entries.begin() + rows, c->entries.end())};
}

VarLike<ScopedVar> vl_scoped_var() {
  VarLike<ScopedVar> vl;
  vl.thin = [](const ScopedVar& v, const Thinning& th) {
    return ScopedVar{th.lookup(v.var), th.target().size()};
  };
  vl.fresh = [](const Sort& sort, const Ctx& ctx) { return ScopedVar{Var{0, sort}, ctx.size()}; };
  return vl;
}

}  // namespace

std::pair<Term, Count> annotate(const Desc& d, const Ctx& ctx, const Term& t) {
  Desc with_let = sum(d, let_desc());
  using K = Kripke<ScopedVar, CountedTerm>;
  SemanticsDef<ScopedVar, CountedTerm> s;
  s.th_v = vl_scoped_var().thin;
  s.var = [](const ScopedVar& v) {
    return CountedTerm{Term::var(v.var), from_var(v.var, v.scope_size)};
  };
  s.alg = [](const Sort&, const Layer<K>& layer) -> CountedTerm {
    auto [left, rest] = split_sum_layer(layer);
    VarLike<ScopedVar> vl = vl_scoped_var();
    if (left) {
      // purely structural: reify the subterms and drop the tallies of the
      // variables they bind
      Layer<Term> out;
      LazyCount total;
      for (const auto& ev : rest.events) {
        if (std::holds_alternative<PayloadValue>(ev)) {
          out.events.emplace_back(std::get<PayloadValue>(ev));
          continue;
        }
        const auto& sub = std::get<SubEvent<K>>(ev);
        CountedTerm c = reify(vl, sub.telescope, sub.sort, sub.child);
        total = merge_lazy(total, drop_rows(c.count, sub.telescope.size()));
        out.events.emplace_back(SubEvent<Term>{sub.telescope, sub.sort, c.term});
      }
      return CountedTerm{Term::con(inject_sum_layer(true, out)), total};
    }
    // the let case: tally the body, read off the bound variable's counter,
    // and use it to control the bound expression's contribution
    const auto& types = std::get<PayloadValue>(rest.events[0]);
    const auto& bound_ev = std::get<SubEvent<K>>(rest.events[1]);
    const auto& body_ev = std::get<SubEvent<K>>(rest.events[2]);
    CountedTerm bound = bound_ev.child.value();
    CountedTerm body = reify(vl, body_ev.telescope, body_ev.sort, body_ev.child);
    Counter usage = body.count ? body.count->entries[0] : Counter::Zero;
    LazyCount body_ambient = drop_rows(body.count, 1);
    Layer<Term> out;
    out.events.emplace_back(PayloadValue::boolean(false));
    out.events.emplace_back(tag_of_counter(usage));
    out.events.emplace_back(types);
    out.events.emplace_back(SubEvent<Term>{{}, bound_ev.sort, bound.term});
    out.events.emplace_back(SubEvent<Term>{body_ev.telescope, body_ev.sort, body.term});
    return CountedTerm{Term::con(std::move(out)),
                       merge_lazy(body_ambient, control_lazy(usage, bound.count))};
  };

  std::vector<ScopedVar> values;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    values.push_back(ScopedVar{Var{i, ctx[i]}, ctx.size()});
  Env<ScopedVar> rho = Env<ScopedVar>::from_values(ctx, ctx, std::move(values));
  CountedTerm result = semantics(s, rho, sort_of(with_let, t), t);
  return {result.term, result.count ? *result.count : zeros(ctx.size())};
}

Term inline_lets(const Desc& d, const Ctx& ctx, const Term& t) {
  Desc with_let = sum(d, let_desc());
  Desc with_clet = sum(d, clet_desc());
  using K = Kripke<Term, Term>;
  SemanticsDef<Term, Term> s;
  s.th_v = [with_let](const Term& v, const Thinning& th) { return ren(with_let, th, v); };
  s.var = [](const Term& v) { return v; };
  s.alg = [with_let](const Sort&, const Layer<K>& layer) -> Term {
    auto [left, rest] = split_sum_layer(layer);
    VarLike<Term> vl = vl_tm(with_let);
    if (left) {
      return Term::con(inject_sum_layer(
          true, map_layer(rest, [&vl](const std::vector<Sort>& telescope, const Sort& sort,
                                      const K& k) { return reify(vl, telescope, sort, k); })));
    }
    Counter usage = counter_of_tag(std::get<PayloadValue>(rest.events[0]));
    const auto& types = std::get<PayloadValue>(rest.events[1]);
    const auto& bound_ev = std::get<SubEvent<K>>(rest.events[2]);
    const auto& body_ev = std::get<SubEvent<K>>(rest.events[3]);
    Term bound = bound_ev.child.value();
    const K& body = body_ev.child;
    if (usage == Counter::Many) {
      // keep the binder, erase the counter
      Layer<Term> out;
      out.events.emplace_back(PayloadValue::boolean(false));
      out.events.emplace_back(types);
      out.events.emplace_back(SubEvent<Term>{{}, bound_ev.sort, bound});
      out.events.emplace_back(SubEvent<Term>{body_ev.telescope, body_ev.sort,
                                             reify(vl, body_ev.telescope, body_ev.sort, body)});
      return Term::con(std::move(out));
    }
    // used at most once: substitute (a zero usage simply drops the bound
    // expression on the floor)
    const Ctx& home = body.home();
    Env<Term> extra = Env<Term>::from_values(Ctx(body_ev.telescope), home, {bound});
    return body.run(identity_thinning(home), extra);
  };
  return semantics(s, base(vl_tm(with_let), ctx), sort_of(with_clet, t), t);
}

}  // namespace binderkit
