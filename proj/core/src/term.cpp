#include "binderkit/term.hpp"

namespace binderkit {

struct Term::Node {
  std::optional<Var> var;
  std::optional<Layer<Term>> layer;
};

Term Term::var(Var v) {
  auto n = std::make_shared<Node>();
  n->var = std::move(v);
  return Term(std::move(n));
}

Term Term::con(Layer<Term> layer) {
  auto n = std::make_shared<Node>();
  n->layer = std::move(layer);
  return Term(std::move(n));
}

bool Term::is_var() const { return n_->var.has_value(); }

const Var& Term::as_var() const {
  if (!n_->var) throw Error("Term::as_var on a constructor node");
  return *n_->var;
}

const Layer<Term>& Term::layer() const {
  if (!n_->layer) throw Error("Term::layer on a variable node");
  return *n_->layer;
}

std::string Term::show() const {
  if (is_var()) return as_var().show();
  std::string out = "(con";
  for (const auto& ev : layer().events) {
    out += " ";
    if (std::holds_alternative<PayloadValue>(ev)) {
      out += std::get<PayloadValue>(ev).show();
    } else {
      const auto& sub = std::get<SubEvent<Term>>(ev);
      out += "{";
      for (std::size_t i = 0; i < sub.telescope.size(); ++i) {
        if (i) out += ",";
        out += sub.telescope[i].show();
      }
      out += "}" + sub.child.show();
    }
  }
  return out + ")";
}

std::string ValidateError::show() const {
  std::string kind_name;
  switch (kind) {
    case Kind::OutOfRangeVar: kind_name = "OutOfRangeVar"; break;
    case Kind::SortMismatch: kind_name = "SortMismatch"; break;
    case Kind::LayerShapeMismatch: kind_name = "LayerShapeMismatch"; break;
  }
  std::string where = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) where += ".";
    where += std::to_string(path[i]);
  }
  where += "]";
  return kind_name + " at " + where + ": " + message;
}

namespace {

ValidateResult fail(ValidateError::Kind kind, std::vector<std::size_t> path, std::string msg) {
  return ValidateResult::err(ValidateError{kind, std::move(path), std::move(msg)});
}

ValidateResult validate_at(const Desc& root, const Ctx& ctx, const Sort& sort, const Term& t,
                           std::vector<std::size_t>& path) {
  if (t.is_var()) {
    const Var& v = t.as_var();
    if (v.index >= ctx.size())
      return fail(ValidateError::Kind::OutOfRangeVar, path,
                  v.show() + " in context of size " + std::to_string(ctx.size()));
    if (!(ctx[v.index] == v.sort))
      return fail(ValidateError::Kind::SortMismatch, path,
                  v.show() + " disagrees with context entry " + ctx[v.index].show());
    if (!(v.sort == sort))
      return fail(ValidateError::Kind::SortMismatch, path,
                  v.show() + " used at sort " + sort.show());
    return ValidateResult::ok({});
  }

  const auto& layer = t.layer();
  Desc cursor = root;
  std::size_t i = 0;
  for (;; ++i) {
    if (cursor.kind() == Desc::Kind::Done) {
      if (i != layer.events.size()) {
        path.push_back(i);
        auto r = fail(ValidateError::Kind::LayerShapeMismatch, path, "trailing layer events");
        path.pop_back();
        return r;
      }
      if (!(cursor.done_sort() == sort))
        return fail(ValidateError::Kind::SortMismatch, path,
                    "constructor produces " + cursor.done_sort().show() + ", expected " +
                        sort.show());
      return ValidateResult::ok({});
    }
    if (i >= layer.events.size()) {
      path.push_back(i);
      auto r = fail(ValidateError::Kind::LayerShapeMismatch, path,
                    "layer ended before the description");
      path.pop_back();
      return r;
    }
    const auto& ev = layer.events[i];
    if (cursor.kind() == Desc::Kind::Sigma) {
      if (!std::holds_alternative<PayloadValue>(ev)) {
        path.push_back(i);
        auto r = fail(ValidateError::Kind::LayerShapeMismatch, path, "expected a payload event");
        path.pop_back();
        return r;
      }
      const auto& p = std::get<PayloadValue>(ev);
      if (!cursor.domain().admits(p)) {
        path.push_back(i);
        auto r = fail(ValidateError::Kind::LayerShapeMismatch, path,
                      "payload " + p.show() + " outside domain " + cursor.domain().show());
        path.pop_back();
        return r;
      }
      cursor = cursor.apply(p);
    } else {
      if (!std::holds_alternative<SubEvent<Term>>(ev)) {
        path.push_back(i);
        auto r = fail(ValidateError::Kind::LayerShapeMismatch, path,
                      "expected a substructure event");
        path.pop_back();
        return r;
      }
      const auto& sub = std::get<SubEvent<Term>>(ev);
      if (sub.telescope != cursor.telescope() || sub.sort != cursor.rec_sort()) {
        path.push_back(i);
        auto r = fail(ValidateError::Kind::LayerShapeMismatch, path,
                      "substructure scope disagrees with the description");
        path.pop_back();
        return r;
      }
      path.push_back(i);
      auto child = validate_at(root, ctx.extended(sub.telescope), sub.sort, sub.child, path);
      if (!child) return child;
      path.pop_back();
      cursor = cursor.rest();
    }
  }
}

}  // namespace

ValidateResult validate(const Desc& d, const Ctx& ctx, const Sort& sort, const Term& t) {
  std::vector<std::size_t> path;
  return validate_at(d, ctx, sort, t, path);
}

Sort sort_of(const Desc& d, const Term& t) {
  if (t.is_var()) return t.as_var().sort;
  Desc cursor = d;
  std::size_t i = 0;
  const auto& layer = t.layer();
  for (;; ++i) {
    if (cursor.kind() == Desc::Kind::Done) return cursor.done_sort();
    if (i >= layer.events.size()) throw Error("sort_of: layer ended before the description");
    const auto& ev = layer.events[i];
    if (cursor.kind() == Desc::Kind::Sigma) {
      if (!std::holds_alternative<PayloadValue>(ev))
        throw Error("sort_of: expected a payload event");
      cursor = cursor.apply(std::get<PayloadValue>(ev));
    } else {
      if (!std::holds_alternative<SubEvent<Term>>(ev))
        throw Error("sort_of: expected a substructure event");
      cursor = cursor.rest();
    }
  }
}

std::size_t size(const Term& t) {
  if (t.is_var()) return 1;
  std::size_t total = 1;
  for (const auto& ev : t.layer().events)
    if (std::holds_alternative<SubEvent<Term>>(ev))
      total += size(std::get<SubEvent<Term>>(ev).child);
  return total;
}

}  // namespace binderkit
