#include "binderkit/equality.hpp"

namespace binderkit {

bool eq_var(const Var& a, const Var& b) { return a.index == b.index && a.sort == b.sort; }

std::string TermDiff::show() const {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(path[i]);
  }
  return out + "] " + reason;
}

namespace {

std::optional<TermDiff> diff_at(const Desc& root, const Term& a, const Term& b,
                                std::vector<std::size_t>& path) {
  auto here = [&path](std::string reason) {
    return TermDiff{path, std::move(reason)};
  };

  if (a.is_var() != b.is_var()) return here("variable vs constructor");
  if (a.is_var()) {
    if (!eq_var(a.as_var(), b.as_var()))
      return here(a.as_var().show() + " vs " + b.as_var().show());
    return std::nullopt;
  }

  const auto& la = a.layer();
  const auto& lb = b.layer();
  Desc cursor = root;
  std::size_t i = 0;
  for (;; ++i) {
    if (cursor.kind() == Desc::Kind::Done) {
      if (i != la.events.size() || i != lb.events.size()) return here("layer length mismatch");
      return std::nullopt;
    }
    if (i >= la.events.size() || i >= lb.events.size()) return here("layer ended early");
    path.push_back(i);
    if (cursor.kind() == Desc::Kind::Sigma) {
      if (!std::holds_alternative<PayloadValue>(la.events[i]) ||
          !std::holds_alternative<PayloadValue>(lb.events[i]))
        return here("expected payload events");
      const auto& pa = std::get<PayloadValue>(la.events[i]);
      const auto& pb = std::get<PayloadValue>(lb.events[i]);
      if (!payload_eq(cursor.domain(), pa, pb))
        return here("payload " + pa.show() + " vs " + pb.show());
      path.pop_back();
      // both payloads equal: either continuation denotes the same code
      cursor = cursor.apply(pa);
    } else {
      if (!std::holds_alternative<SubEvent<Term>>(la.events[i]) ||
          !std::holds_alternative<SubEvent<Term>>(lb.events[i]))
        return here("expected substructure events");
      const auto& sa = std::get<SubEvent<Term>>(la.events[i]);
      const auto& sb = std::get<SubEvent<Term>>(lb.events[i]);
      if (sa.telescope != sb.telescope || sa.sort != sb.sort)
        return here("substructure scopes differ");
      auto child = diff_at(root, sa.child, sb.child, path);
      if (child) return child;
      path.pop_back();
      cursor = cursor.rest();
    }
  }
}

}  // namespace

std::optional<TermDiff> term_diff(const Desc& d, const Term& a, const Term& b) {
  std::vector<std::size_t> path;
  return diff_at(d, a, b, path);
}

}  // namespace binderkit
