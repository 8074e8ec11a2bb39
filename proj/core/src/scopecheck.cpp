#include "binderkit/scopecheck.hpp"

namespace binderkit {

struct RawTerm::Node {
  std::optional<std::string> name;
  std::vector<RawEvent> events;
  SourcePos pos;
};

RawTerm RawTerm::var(std::string name, SourcePos pos) {
  auto n = std::make_shared<Node>();
  n->name = std::move(name);
  n->pos = pos;
  return RawTerm(std::move(n));
}

RawTerm RawTerm::con(std::vector<RawEvent> events, SourcePos pos) {
  auto n = std::make_shared<Node>();
  n->events = std::move(events);
  n->pos = pos;
  return RawTerm(std::move(n));
}

bool RawTerm::is_var() const { return n_->name.has_value(); }

const std::string& RawTerm::name() const {
  if (!n_->name) throw Error("RawTerm::name on a constructor node");
  return *n_->name;
}

const std::vector<RawEvent>& RawTerm::events() const { return n_->events; }

const SourcePos& RawTerm::pos() const { return n_->pos; }

std::string ScopeError::show() const {
  std::string where = std::to_string(pos.line) + ":" + std::to_string(pos.col);
  switch (kind) {
    case Kind::OutOfScope: return "out of scope: " + name + " at " + where;
    case Kind::WrongSort:
      return "wrong sort: " + name + " expected " + (expected ? expected->show() : "?") + " at " +
             where;
    case Kind::ShapeMismatch: return "malformed term: " + message + " at " + where;
  }
  return message;
}

Result<Var, ScopeError> to_var(const std::string& name, const Sort& sort,
                               const std::vector<std::string>& names, const Ctx& ctx,
                               const SourcePos& pos) {
  if (names.size() != ctx.size()) throw Error("to_var: names and context disagree on length");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] != name) continue;
    if (ctx[i] == sort) return Result<Var, ScopeError>::ok(Var{i, sort});
    return Result<Var, ScopeError>::err(
        ScopeError{ScopeError::Kind::WrongSort, name, sort, pos, ""});
  }
  return Result<Var, ScopeError>::err(
      ScopeError{ScopeError::Kind::OutOfScope, name, std::nullopt, pos, ""});
}

namespace {

using TmResult = Result<Term, ScopeError>;

TmResult shape_error(const SourcePos& pos, std::string message) {
  return TmResult::err(
      ScopeError{ScopeError::Kind::ShapeMismatch, "", std::nullopt, pos, std::move(message)});
}

}  // namespace

Result<Term, ScopeError> to_tm(const Desc& d, const std::vector<std::string>& names,
                               const Ctx& ctx, const Sort& sort, const RawTerm& raw) {
  if (raw.is_var()) {
    auto v = to_var(raw.name(), sort, names, ctx, raw.pos());
    if (!v) return TmResult::err(v.error());
    return TmResult::ok(Term::var(v.value()));
  }

  Layer<Term> out;
  Desc cursor = d;
  std::size_t i = 0;
  const auto& events = raw.events();
  for (;; ++i) {
    if (cursor.kind() == Desc::Kind::Done) {
      if (i != events.size()) return shape_error(raw.pos(), "too many arguments");
      if (!(cursor.done_sort() == sort))
        return shape_error(raw.pos(), "constructor produces sort " + cursor.done_sort().show() +
                                          " where " + sort.show() + " is expected");
      return TmResult::ok(Term::con(std::move(out)));
    }
    if (i >= events.size()) return shape_error(raw.pos(), "too few arguments");
    const auto& ev = events[i];
    if (cursor.kind() == Desc::Kind::Sigma) {
      if (!std::holds_alternative<PayloadValue>(ev))
        return shape_error(raw.pos(), "expected a payload");
      const auto& p = std::get<PayloadValue>(ev);
      if (!cursor.domain().admits(p))
        return shape_error(raw.pos(), "payload " + p.show() + " outside domain " +
                                          cursor.domain().show());
      out.events.emplace_back(p);
      cursor = cursor.apply(p);
    } else {
      if (!std::holds_alternative<RawSub>(ev))
        return shape_error(raw.pos(), "expected a subterm");
      const auto& sub = std::get<RawSub>(ev);
      const auto& telescope = cursor.telescope();
      if (sub.binder_names.size() != telescope.size())
        return shape_error(sub.child.pos(),
                           "binder list has " + std::to_string(sub.binder_names.size()) +
                               " names, telescope needs " + std::to_string(telescope.size()));
      // concrete names arrive just in time: prepend them innermost first
      std::vector<std::string> extended_names = sub.binder_names;
      extended_names.insert(extended_names.end(), names.begin(), names.end());
      auto child =
          to_tm(d, extended_names, ctx.extended(telescope), cursor.rec_sort(), sub.child);
      if (!child) return child;
      out.events.emplace_back(SubEvent<Term>{telescope, cursor.rec_sort(), child.value()});
      cursor = cursor.rest();
    }
  }
}

namespace {

RawTerm to_raw_at(const Desc& d, const std::vector<std::string>& names, const Term& t,
                  std::size_t& counter) {
  if (t.is_var()) {
    const Var& v = t.as_var();
    if (v.index >= names.size()) throw Error("to_raw: variable outside the name list");
    return RawTerm::var(names[v.index], SourcePos{});
  }
  std::vector<RawEvent> events;
  for (const auto& ev : t.layer().events) {
    if (std::holds_alternative<PayloadValue>(ev)) {
      events.emplace_back(std::get<PayloadValue>(ev));
      continue;
    }
    const auto& sub = std::get<SubEvent<Term>>(ev);
    std::vector<std::string> binders;
    for (std::size_t i = 0; i < sub.telescope.size(); ++i)
      binders.push_back("x" + std::to_string(counter++));
    std::vector<std::string> extended = binders;
    extended.insert(extended.end(), names.begin(), names.end());
    events.emplace_back(
        RawSub{binders, to_raw_at(d, extended, sub.child, counter)});
  }
  return RawTerm::con(std::move(events), SourcePos{});
}

}  // namespace

RawTerm to_raw(const Desc& d, const std::vector<std::string>& names, const Term& t) {
  std::size_t counter = 0;
  return to_raw_at(d, names, t, counter);
}

}  // namespace binderkit
