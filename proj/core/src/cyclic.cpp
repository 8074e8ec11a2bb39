#include "binderkit/cyclic.hpp"

namespace binderkit {

struct CoTree::Cell {
  std::function<CoLayer()> produce;
  std::optional<CoLayer> value;
};

CoTree CoTree::defer(std::function<CoLayer()> produce) {
  auto cell = std::make_shared<Cell>();
  cell->produce = std::move(produce);
  return CoTree(std::move(cell));
}

const CoLayer& CoTree::force() const {
  if (!cell_->value) {
    cell_->value = cell_->produce();
    cell_->produce = nullptr;
  }
  return *cell_->value;
}

Term plug(const Desc& d, const Term& closed_term, const Ctx& ctx, const Term& open_term) {
  Env<Term> constant(ctx, Ctx(), [closed_term](const Var&) { return closed_term; });
  return sub(d, constant, open_term);
}

Layer<Term> unroll(const Desc& d, const Term& closed_term) {
  if (closed_term.is_var()) throw Error("unroll: a valid closed term cannot be a variable");
  Layer<Term> out;
  for (const auto& ev : closed_term.layer().events) {
    if (std::holds_alternative<PayloadValue>(ev)) {
      out.events.emplace_back(std::get<PayloadValue>(ev));
      continue;
    }
    const auto& sub_ev = std::get<SubEvent<Term>>(ev);
    Term plugged = plug(d, closed_term, Ctx(sub_ev.telescope), sub_ev.child);
    out.events.emplace_back(SubEvent<Term>{{}, sub_ev.sort, std::move(plugged)});
  }
  return out;
}

CoTree unfold(const Desc& d, const Term& closed_term) {
  return CoTree::defer([d, closed_term]() {
    Layer<Term> top = unroll(d, closed_term);
    CoLayer out;
    for (const auto& ev : top.events) {
      if (std::holds_alternative<PayloadValue>(ev)) {
        out.events.emplace_back(std::get<PayloadValue>(ev));
      } else {
        const auto& sub_ev = std::get<SubEvent<Term>>(ev);
        out.events.emplace_back(CoSub{unfold(d, sub_ev.child)});
      }
    }
    return out;
  });
}

FTree take_depth(const CoTree& tree, std::size_t depth) {
  FTree out;
  if (depth == 0) {
    out.truncated = true;
    return out;
  }
  const auto& layer = tree.force();
  for (const auto& ev : layer.events) {
    if (std::holds_alternative<PayloadValue>(ev))
      out.payloads.push_back(std::get<PayloadValue>(ev));
    else
      out.children.push_back(take_depth(std::get<CoSub>(ev).child, depth - 1));
  }
  return out;
}

std::string BisimResult::show() const {
  if (ok) return "bisimilar";
  std::string out = "diverge at [";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(path[i]);
  }
  return out + "]";
}

BisimResult bisim_depth(const CoTree& a, const CoTree& b, std::size_t depth) {
  if (depth == 0) return BisimResult{};
  const auto& la = a.force();
  const auto& lb = b.force();
  if (la.events.size() != lb.events.size()) return BisimResult{false, {}};
  for (std::size_t i = 0; i < la.events.size(); ++i) {
    bool pa = std::holds_alternative<PayloadValue>(la.events[i]);
    bool pb = std::holds_alternative<PayloadValue>(lb.events[i]);
    if (pa != pb) return BisimResult{false, {i}};
    if (pa) {
      if (std::get<PayloadValue>(la.events[i]) != std::get<PayloadValue>(lb.events[i]))
        return BisimResult{false, {i}};
      continue;
    }
    BisimResult sub = bisim_depth(std::get<CoSub>(la.events[i]).child,
                                  std::get<CoSub>(lb.events[i]).child, depth - 1);
    if (!sub.ok) {
      sub.path.insert(sub.path.begin(), i);
      return sub;
    }
  }
  return BisimResult{};
}

}  // namespace binderkit
