#include "binderkit/builtin.hpp"

namespace binderkit {

namespace {

const Sort kUnit = Sort::unit();

Sort arrow_sort(const Sort& a, const Sort& b) {
  if (!a.is_type() || !b.is_type()) return Sort::unit();  // total fallback, never hit by valid use
  return Sort::of_type(SimpleType::arrow(a.type(), b.type()));
}

}  // namespace

const Desc& utlc_desc() {
  static const Desc app = Desc::rec({}, kUnit, Desc::rec({}, kUnit, Desc::done(kUnit)));
  static const Desc lam = Desc::rec({kUnit}, kUnit, Desc::done(kUnit));
  static const Desc d = sum(app, lam);
  return d;
}

const Desc& bidi_desc() {
  static const Desc d = Desc::sigma(
      PayloadDomain::tag({"app", "lam", "emb", "cut"}), [](const PayloadValue& tag) {
        switch (tag.tag_index()) {
          case 0:  // app: infer the function, check the argument
            return Desc::rec({}, Sort::infer(),
                             Desc::rec({}, Sort::check(), Desc::done(Sort::infer())));
          case 1:  // lam: binds an inferrable variable, body is checked
            return Desc::rec({Sort::infer()}, Sort::check(), Desc::done(Sort::check()));
          case 2:  // emb: an inferrable term used where a check is wanted
            return Desc::rec({}, Sort::infer(), Desc::done(Sort::check()));
          default:  // cut: a checked term with a type annotation
            return Desc::sigma(PayloadDomain::sort(), [](const PayloadValue&) {
              return Desc::rec({}, Sort::check(), Desc::done(Sort::infer()));
            });
        }
      });
  return d;
}

const Desc& stlc_desc() {
  static const Desc d =
      Desc::sigma(PayloadDomain::tag({"app", "lam"}), [](const PayloadValue& tag) {
        bool is_app = tag.tag_index() == 0;
        return Desc::sigma(PayloadDomain::pair(PayloadDomain::sort(), PayloadDomain::sort()),
                           [is_app](const PayloadValue& types) {
                             Sort dom = types.first().as_sort();
                             Sort cod = types.second().as_sort();
                             if (is_app)
                               return Desc::rec({}, arrow_sort(dom, cod),
                                                Desc::rec({}, dom, Desc::done(cod)));
                             return Desc::rec({dom}, cod, Desc::done(arrow_sort(dom, cod)));
                           });
      });
  return d;
}

const Desc& let_desc() {
  static const Desc d = Desc::sigma(
      PayloadDomain::pair(PayloadDomain::sort(), PayloadDomain::sort()),
      [](const PayloadValue& types) {
        Sort bound = types.first().as_sort();
        Sort body = types.second().as_sort();
        return Desc::rec({}, bound, Desc::rec({bound}, body, Desc::done(body)));
      });
  return d;
}

const Desc& clet_desc() {
  static const Desc d = Desc::sigma(PayloadDomain::tag({"zero", "one", "many"}),
                                    [](const PayloadValue&) { return let_desc(); });
  return d;
}

const Desc& clist_desc() {
  static const Desc d = Desc::sigma(PayloadDomain::boolean(), [](const PayloadValue& is_nil) {
    if (is_nil.as_bool()) return Desc::done(kUnit);
    // cons: a head plus a tail which may point back at this very cell
    return Desc::sigma(PayloadDomain::nat(), [](const PayloadValue&) {
      return Desc::rec({kUnit}, kUnit, Desc::done(kUnit));
    });
  });
  return d;
}

namespace {

EnumerationHints unit_hints() {
  EnumerationHints h;
  h.sorts = {Sort::unit()};
  h.nat_bound = 3;
  return h;
}

EnumerationHints type_hints() {
  EnumerationHints h;
  for (const auto& t : enumerate_types(5)) h.sorts.push_back(Sort::of_type(t));
  return h;
}

}  // namespace

const Syntax& utlc_syntax() {
  static const Syntax s{"utlc", utlc_desc(), unit_sort_domain(), Sort::unit(), unit_hints()};
  return s;
}

const Syntax& bidi_syntax() {
  static const Syntax s{"bidi", bidi_desc(), mode_sort_domain(), Sort::infer(), type_hints()};
  return s;
}

const Syntax& stlc_syntax() {
  static const Syntax s{"stlc", stlc_desc(), type_sort_domain(),
                        Sort::of_type(SimpleType::arrow(SimpleType::alpha(), SimpleType::alpha())),
                        type_hints()};
  return s;
}

const Syntax& utlc_let_syntax() {
  static const Syntax s{"utlc+let", sum(utlc_desc(), let_desc()), unit_sort_domain(),
                        Sort::unit(), unit_hints()};
  return s;
}

const Syntax& clist_syntax() {
  static const Syntax s{"clist", clist_desc(), unit_sort_domain(), Sort::unit(), unit_hints()};
  return s;
}

const std::vector<const Syntax*>& all_syntaxes() {
  static const std::vector<const Syntax*> v{&utlc_syntax(), &bidi_syntax(), &stlc_syntax(),
                                            &utlc_let_syntax(), &clist_syntax()};
  return v;
}

const Syntax* find_syntax(const std::string& name) {
  for (const Syntax* s : all_syntaxes())
    if (s->name == name) return s;
  return nullptr;
}

Term lift_sum_left(const Term& t) {
  if (t.is_var()) return t;
  Layer<Term> lifted =
      map_layer(t.layer(), [](const std::vector<Sort>&, const Sort&, const Term& child) {
        return lift_sum_left(child);
      });
  return Term::con(inject_sum_layer(true, lifted));
}

namespace utlc {

Term v(std::size_t index) { return Term::var(Var{index, Sort::unit()}); }

Term lam(Term body) {
  Layer<Term> l;
  l.events.emplace_back(PayloadValue::boolean(false));
  l.events.emplace_back(SubEvent<Term>{{Sort::unit()}, Sort::unit(), std::move(body)});
  return Term::con(std::move(l));
}

Term app(Term fn, Term arg) {
  Layer<Term> l;
  l.events.emplace_back(PayloadValue::boolean(true));
  l.events.emplace_back(SubEvent<Term>{{}, Sort::unit(), std::move(fn)});
  l.events.emplace_back(SubEvent<Term>{{}, Sort::unit(), std::move(arg)});
  return Term::con(std::move(l));
}

Term identity() { return lam(v(0)); }

}  // namespace utlc

namespace bidi {

Term v(std::size_t index, Sort mode) { return Term::var(Var{index, std::move(mode)}); }

Term lam(Term body) {
  Layer<Term> l;
  l.events.emplace_back(PayloadValue::tag(1, "lam"));
  l.events.emplace_back(SubEvent<Term>{{Sort::infer()}, Sort::check(), std::move(body)});
  return Term::con(std::move(l));
}

Term app(Term fn, Term arg) {
  Layer<Term> l;
  l.events.emplace_back(PayloadValue::tag(0, "app"));
  l.events.emplace_back(SubEvent<Term>{{}, Sort::infer(), std::move(fn)});
  l.events.emplace_back(SubEvent<Term>{{}, Sort::check(), std::move(arg)});
  return Term::con(std::move(l));
}

Term emb(Term inferrable) {
  Layer<Term> l;
  l.events.emplace_back(PayloadValue::tag(2, "emb"));
  l.events.emplace_back(SubEvent<Term>{{}, Sort::infer(), std::move(inferrable)});
  return Term::con(std::move(l));
}

Term cut(Term checkable, SimpleType annotation) {
  Layer<Term> l;
  l.events.emplace_back(PayloadValue::tag(3, "cut"));
  l.events.emplace_back(PayloadValue::sort(Sort::of_type(std::move(annotation))));
  l.events.emplace_back(SubEvent<Term>{{}, Sort::check(), std::move(checkable)});
  return Term::con(std::move(l));
}

}  // namespace bidi

namespace stlc {

Term v(std::size_t index, SimpleType type) {
  return Term::var(Var{index, Sort::of_type(std::move(type))});
}

Term lam(SimpleType dom, SimpleType cod, Term body) {
  Sort d = Sort::of_type(dom);
  Sort c = Sort::of_type(cod);
  Layer<Term> l;
  l.events.emplace_back(PayloadValue::tag(1, "lam"));
  l.events.emplace_back(PayloadValue::pair(PayloadValue::sort(d), PayloadValue::sort(c)));
  l.events.emplace_back(SubEvent<Term>{{d}, c, std::move(body)});
  return Term::con(std::move(l));
}

Term app(SimpleType dom, SimpleType cod, Term fn, Term arg) {
  Sort d = Sort::of_type(dom);
  Sort c = Sort::of_type(cod);
  Sort fn_sort = Sort::of_type(SimpleType::arrow(dom, cod));
  Layer<Term> l;
  l.events.emplace_back(PayloadValue::tag(0, "app"));
  l.events.emplace_back(PayloadValue::pair(PayloadValue::sort(d), PayloadValue::sort(c)));
  l.events.emplace_back(SubEvent<Term>{{}, fn_sort, std::move(fn)});
  l.events.emplace_back(SubEvent<Term>{{}, d, std::move(arg)});
  return Term::con(std::move(l));
}

}  // namespace stlc

namespace letsyn {

Term let_(Sort bound_sort, Sort body_sort, Term bound, Term body) {
  Layer<Term> l;
  l.events.emplace_back(PayloadValue::boolean(false));
  l.events.emplace_back(
      PayloadValue::pair(PayloadValue::sort(bound_sort), PayloadValue::sort(body_sort)));
  l.events.emplace_back(SubEvent<Term>{{}, bound_sort, std::move(bound)});
  l.events.emplace_back(SubEvent<Term>{{bound_sort}, body_sort, std::move(body)});
  return Term::con(std::move(l));
}

}  // namespace letsyn

namespace clist {

Term nil() {
  Layer<Term> l;
  l.events.emplace_back(PayloadValue::boolean(true));
  return Term::con(std::move(l));
}

Term cons(std::uint64_t head, Term tail) {
  Layer<Term> l;
  l.events.emplace_back(PayloadValue::boolean(false));
  l.events.emplace_back(PayloadValue::nat(head));
  l.events.emplace_back(SubEvent<Term>{{Sort::unit()}, Sort::unit(), std::move(tail)});
  return Term::con(std::move(l));
}

Term backptr(std::size_t index) { return Term::var(Var{index, Sort::unit()}); }

}  // namespace clist

}  // namespace binderkit
