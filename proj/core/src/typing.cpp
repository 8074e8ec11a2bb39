#include "binderkit/typing.hpp"

namespace binderkit {

bool type_eq(const SimpleType& a, const SimpleType& b) { return a == b; }

std::optional<std::pair<SimpleType, SimpleType>> is_arrow(const SimpleType& t) {
  if (!t.is_arrow()) return std::nullopt;
  return std::make_pair(t.dom(), t.cod());
}

Typing Typing::of_infer_types(std::vector<SimpleType> types) {
  Typing t;
  for (auto& ty : types) t.entries_.emplace_back(std::move(ty));
  return t;
}

Typing Typing::with_entries(std::vector<std::optional<SimpleType>> entries) {
  Typing t;
  t.entries_ = std::move(entries);
  return t;
}

Typing Typing::extended_infer(SimpleType type) const {
  Typing t;
  t.entries_.emplace_back(std::move(type));
  t.entries_.insert(t.entries_.end(), entries_.begin(), entries_.end());
  return t;
}

const SimpleType& Typing::type_at(std::size_t i) const {
  if (i >= entries_.size()) throw Error("Typing::type_at: index out of range");
  if (!entries_[i]) throw Error("Typing::type_at: entry " + std::to_string(i) +
                                " is a Check entry and carries no type");
  return *entries_[i];
}

Ctx Typing::modes() const {
  std::vector<Sort> modes;
  for (const auto& e : entries_) modes.push_back(e ? Sort::infer() : Sort::check());
  return Ctx(std::move(modes));
}

std::vector<SimpleType> Typing::erase() const {
  std::vector<SimpleType> out;
  for (const auto& e : entries_)
    if (e) out.push_back(*e);
  return out;
}

std::size_t Typing::erased_index(std::size_t mode_index) const {
  if (mode_index >= entries_.size()) throw Error("Typing::erased_index: out of range");
  if (!entries_[mode_index]) throw Error("Typing::erased_index: Check entries are not erased");
  std::size_t out = 0;
  for (std::size_t i = 0; i < mode_index; ++i)
    if (entries_[i]) ++out;
  return out;
}

namespace {

// Computations of the type-checking semantics: a deferred inference or a
// candidate test, depending on the node's mode.
struct ModeComp {
  std::function<std::optional<SimpleType>()> infer;
  std::function<bool(const SimpleType&)> check;
};

SimpleType payload_type(const PayloadValue& p) {
  const Sort& s = p.as_sort();
  if (!s.is_type()) throw Error("typing: annotation payload is not a simple type");
  return s.type();
}

SemanticsDef<SimpleType, ModeComp> typecheck_semantics() {
  SemanticsDef<SimpleType, ModeComp> s;
  s.th_v = [](const SimpleType& t, const Thinning&) { return t; };
  s.var = [](const SimpleType& t) {
    ModeComp c;
    c.infer = [t]() -> std::optional<SimpleType> { return t; };
    return c;
  };
  s.alg = [](const Sort&, const Layer<Kripke<SimpleType, ModeComp>>& layer) -> ModeComp {
    using K = Kripke<SimpleType, ModeComp>;
    const auto& tag = std::get<PayloadValue>(layer.events[0]);
    ModeComp out;
    switch (tag.tag_index()) {
      case 0: {  // app: infer the function, demand an arrow, check the argument
        ModeComp fn = std::get<SubEvent<K>>(layer.events[1]).child.value();
        ModeComp arg = std::get<SubEvent<K>>(layer.events[2]).child.value();
        out.infer = [fn, arg]() -> std::optional<SimpleType> {
          auto fn_type = fn.infer();
          if (!fn_type) return std::nullopt;
          auto arr = is_arrow(*fn_type);
          if (!arr) return std::nullopt;
          if (!arg.check(arr->first)) return std::nullopt;
          return arr->second;
        };
        break;
      }
      case 1: {  // lam: split the candidate arrow, check the body at the codomain
        K body = std::get<SubEvent<K>>(layer.events[1]).child;
        out.check = [body](const SimpleType& candidate) -> bool {
          auto arr = is_arrow(candidate);
          if (!arr) return false;
          const Ctx& home = body.home();
          Thinning push = weaken(Sort::infer(), home);
          Env<SimpleType> bound = Env<SimpleType>::from_values(
              Ctx({Sort::infer()}), home.extended({Sort::infer()}), {arr->first});
          ModeComp inner = body.run(push, bound);
          return inner.check(arr->second);
        };
        break;
      }
      case 2: {  // emb: succeeds when the inferred type is the expected one
        ModeComp e = std::get<SubEvent<K>>(layer.events[1]).child.value();
        out.check = [e](const SimpleType& candidate) -> bool {
          auto inferred = e.infer();
          return inferred && type_eq(*inferred, candidate);
        };
        break;
      }
      default: {  // cut: check against the annotation, then return it
        SimpleType annotation = payload_type(std::get<PayloadValue>(layer.events[1]));
        ModeComp c = std::get<SubEvent<K>>(layer.events[2]).child.value();
        out.infer = [annotation, c]() -> std::optional<SimpleType> {
          if (!c.check(annotation)) return std::nullopt;
          return annotation;
        };
        break;
      }
    }
    return out;
  };
  return s;
}

}  // namespace

Result<TypeCheckOutcome, TypingError> typecheck(const Term& t, const Sort& mode,
                                                const Typing& typing) {
  Ctx modes = typing.modes();
  std::vector<SimpleType> values;
  for (std::size_t i = 0; i < typing.size(); ++i) {
    if (!typing.has_type(i))
      return Result<TypeCheckOutcome, TypingError>::err(
          TypingError{"variable " + std::to_string(i) +
                      " has mode Check; no environment value exists for it"});
    values.push_back(typing.type_at(i));
  }
  Env<SimpleType> rho = Env<SimpleType>::from_values(modes, modes, std::move(values));
  ModeComp comp = semantics(typecheck_semantics(), rho, mode, t);
  TypeCheckOutcome out;
  if (mode == Sort::infer())
    out.inferred = comp.infer();
  else
    out.check = comp.check;
  return Result<TypeCheckOutcome, TypingError>::ok(std::move(out));
}

std::optional<SimpleType> infer_closed(const Term& t) {
  auto r = typecheck(t, Sort::infer(), Typing{});
  if (!r) return std::nullopt;
  return r.value().inferred;
}

namespace {

// Elaboration values: given a typing of the current mode scope, produce
// the variable's type together with its position in that scope.
using ElabVal = std::function<std::pair<SimpleType, Var>(const Typing&)>;

struct ElabComp {
  std::function<std::optional<std::pair<SimpleType, Term>>(const Typing&)> infer;
  std::function<std::optional<Term>(const Typing&, const SimpleType&)> check;
};

// Restricts a typing of the thinning's target scope to its source scope.
Typing restrict_typing(const Typing& typing, const Thinning& th) {
  std::vector<SimpleType> types;
  const Ctx& src = th.source();
  for (std::size_t i = 0; i < src.size(); ++i) {
    Var image = th.lookup(Var{i, src[i]});
    types.push_back(typing.type_at(image.index));
  }
  return Typing::of_infer_types(std::move(types));
}

SemanticsDef<ElabVal, ElabComp> elaborate_semantics() {
  SemanticsDef<ElabVal, ElabComp> s;
  s.th_v = [](const ElabVal& v, const Thinning& th) -> ElabVal {
    return [v, th](const Typing& typing) {
      auto [type, var] = v(restrict_typing(typing, th));
      return std::make_pair(type, th.lookup(var));
    };
  };
  s.var = [](const ElabVal& v) {
    ElabComp c;
    c.infer = [v](const Typing& typing) -> std::optional<std::pair<SimpleType, Term>> {
      auto [type, var] = v(typing);
      return std::make_pair(
          type, Term::var(Var{typing.erased_index(var.index), Sort::of_type(type)}));
    };
    return c;
  };
  s.alg = [](const Sort&, const Layer<Kripke<ElabVal, ElabComp>>& layer) -> ElabComp {
    using K = Kripke<ElabVal, ElabComp>;
    const auto& tag = std::get<PayloadValue>(layer.events[0]);
    ElabComp out;
    switch (tag.tag_index()) {
      case 0: {  // app
        ElabComp fn = std::get<SubEvent<K>>(layer.events[1]).child.value();
        ElabComp arg = std::get<SubEvent<K>>(layer.events[2]).child.value();
        out.infer =
            [fn, arg](const Typing& typing) -> std::optional<std::pair<SimpleType, Term>> {
          auto f = fn.infer(typing);
          if (!f) return std::nullopt;
          auto arr = is_arrow(f->first);
          if (!arr) return std::nullopt;
          auto a = arg.check(typing, arr->first);
          if (!a) return std::nullopt;
          return std::make_pair(arr->second,
                                stlc::app(arr->first, arr->second, f->second, *a));
        };
        break;
      }
      case 1: {  // lam
        K body = std::get<SubEvent<K>>(layer.events[1]).child;
        out.check = [body](const Typing& typing,
                           const SimpleType& candidate) -> std::optional<Term> {
          auto arr = is_arrow(candidate);
          if (!arr) return std::nullopt;
          const Ctx& home = body.home();
          Thinning push = weaken(Sort::infer(), home);
          ElabVal newest = [](const Typing& inner) {
            return std::make_pair(inner.type_at(0), Var{0, Sort::infer()});
          };
          Env<ElabVal> bound = Env<ElabVal>::from_values(
              Ctx({Sort::infer()}), home.extended({Sort::infer()}), {newest});
          ElabComp inner = body.run(push, bound);
          auto b = inner.check(typing.extended_infer(arr->first), arr->second);
          if (!b) return std::nullopt;
          return stlc::lam(arr->first, arr->second, *b);
        };
        break;
      }
      case 2: {  // emb: cast the inferred term to the expected type
        ElabComp e = std::get<SubEvent<K>>(layer.events[1]).child.value();
        out.check = [e](const Typing& typing, const SimpleType& candidate) -> std::optional<Term> {
          auto inferred = e.infer(typing);
          if (!inferred || !type_eq(inferred->first, candidate)) return std::nullopt;
          return inferred->second;
        };
        break;
      }
      default: {  // cut
        SimpleType annotation = payload_type(std::get<PayloadValue>(layer.events[1]));
        ElabComp c = std::get<SubEvent<K>>(layer.events[2]).child.value();
        out.infer =
            [annotation, c](const Typing& typing) -> std::optional<std::pair<SimpleType, Term>> {
          auto t = c.check(typing, annotation);
          if (!t) return std::nullopt;
          return std::make_pair(annotation, *t);
        };
        break;
      }
    }
    return out;
  };
  return s;
}

}  // namespace

Result<ElaborateOutcome, TypingError> elaborate(const Term& t, const Sort& mode,
                                                const Typing& typing) {
  Ctx modes = typing.modes();
  std::vector<ElabVal> values;
  for (std::size_t i = 0; i < typing.size(); ++i) {
    if (!typing.has_type(i))
      return Result<ElaborateOutcome, TypingError>::err(
          TypingError{"variable " + std::to_string(i) +
                      " has mode Check; no environment value exists for it"});
    values.push_back([i](const Typing& current) {
      return std::make_pair(current.type_at(i), Var{i, Sort::infer()});
    });
  }
  Env<ElabVal> rho = Env<ElabVal>::from_values(modes, modes, std::move(values));
  ElabComp comp = semantics(elaborate_semantics(), rho, mode, t);
  ElaborateOutcome out;
  if (mode == Sort::infer()) {
    out.infer = [comp, typing]() { return comp.infer(typing); };
  } else {
    out.check = [comp, typing](const SimpleType& candidate) {
      return comp.check(typing, candidate);
    };
  }
  return Result<ElaborateOutcome, TypingError>::ok(std::move(out));
}

std::optional<std::pair<SimpleType, Term>> elaborate_closed(const Term& t) {
  auto r = elaborate(t, Sort::infer(), Typing{});
  if (!r) return std::nullopt;
  return r.value().infer();
}

}  // namespace binderkit
