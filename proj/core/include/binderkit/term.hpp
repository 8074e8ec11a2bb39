#ifndef BINDERKIT_TERM_HPP
#define BINDERKIT_TERM_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "binderkit/desc.hpp"
#include "binderkit/result.hpp"
#include "binderkit/scope.hpp"

namespace binderkit {

/// One recursive position of a layer: the telescope of newly bound sorts,
/// the substructure's sort, and whatever sits in the slot.
template <typename X>
struct SubEvent {
  std::vector<Sort> telescope;
  Sort sort;
  X child;
};

/// A layer is the trace of one walk through a description: a payload for
/// every Sigma, a substructure for every Rec, in order.
template <typename X>
struct Layer {
  using Event = std::variant<PayloadValue, SubEvent<X>>;
  std::vector<Event> events;
};

/// Maps over the substructures of a layer without consulting a
/// description; shape is taken on faith. Traversals that must check
/// conformance use fmap_layer below.
template <typename X, typename F>
auto map_layer(const Layer<X>& layer, F f)
    -> Layer<decltype(f(std::declval<std::vector<Sort>>(), std::declval<Sort>(),
                        std::declval<X>()))> {
  using Y = decltype(f(std::declval<std::vector<Sort>>(), std::declval<Sort>(), std::declval<X>()));
  Layer<Y> out;
  for (const auto& ev : layer.events) {
    if (std::holds_alternative<PayloadValue>(ev)) {
      out.events.emplace_back(std::get<PayloadValue>(ev));
    } else {
      const auto& sub = std::get<SubEvent<X>>(ev);
      out.events.emplace_back(SubEvent<Y>{sub.telescope, sub.sort,
                                          f(sub.telescope, sub.sort, sub.child)});
    }
  }
  return out;
}

/// A term over some description: a variable, or one description-shaped
/// layer whose substructures live in telescope-extended scopes.
class Term {
 public:
  static Term var(Var v);
  static Term con(Layer<Term> layer);

  bool is_var() const;
  const Var& as_var() const;
  const Layer<Term>& layer() const;

  std::string show() const;  // debugging form, not a surface syntax

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct ValidateError {
  enum class Kind { OutOfRangeVar, SortMismatch, LayerShapeMismatch };
  Kind kind;
  std::vector<std::size_t> path;  // event indices from the root, outermost first
  std::string message;

  std::string show() const;
};

using ValidateResult = Result<std::monostate, ValidateError>;

/// Checks that `t` is well scoped and well sorted for `d` at `sort` in
/// `ctx`; substructures are checked in telescope-extended scopes.
ValidateResult validate(const Desc& d, const Ctx& ctx, const Sort& sort, const Term& t);

/// The sort a conformant term constructs, read off by replaying its top
/// layer against the description. Throws Error on a non-conformant layer.
Sort sort_of(const Desc& d, const Term& t);

/// Functorial action on one layer, checking conformance with `d` as it
/// goes. Payloads are kept, each substructure is rewritten by `f`.
template <typename X, typename F>
auto fmap_layer(const Desc& d, F f, const Layer<X>& layer)
    -> Layer<decltype(f(std::declval<std::vector<Sort>>(), std::declval<Sort>(),
                        std::declval<X>()))> {
  using Y = decltype(f(std::declval<std::vector<Sort>>(), std::declval<Sort>(), std::declval<X>()));
  Layer<Y> out;
  Desc cursor = d;
  std::size_t i = 0;
  for (;; ++i) {
    if (cursor.kind() == Desc::Kind::Done) {
      if (i != layer.events.size())
        throw Error("fmap_layer: trailing events after the description ended");
      return out;
    }
    if (i >= layer.events.size()) throw Error("fmap_layer: layer ended before the description");
    const auto& ev = layer.events[i];
    if (cursor.kind() == Desc::Kind::Sigma) {
      if (!std::holds_alternative<PayloadValue>(ev))
        throw Error("fmap_layer: expected a payload event at position " + std::to_string(i));
      const auto& p = std::get<PayloadValue>(ev);
      out.events.emplace_back(p);
      cursor = cursor.apply(p);
    } else {
      if (!std::holds_alternative<SubEvent<X>>(ev))
        throw Error("fmap_layer: expected a substructure event at position " + std::to_string(i));
      const auto& sub = std::get<SubEvent<X>>(ev);
      if (sub.telescope != cursor.telescope() || sub.sort != cursor.rec_sort())
        throw Error("fmap_layer: substructure scope disagrees with the description at position " +
                    std::to_string(i));
      out.events.emplace_back(SubEvent<Y>{sub.telescope, sub.sort,
                                          f(sub.telescope, sub.sort, sub.child)});
      cursor = cursor.rest();
    }
  }
}

/// As fmap_layer, but `f` may fail; effects run left to right in event
/// order and the first failure aborts the walk.
template <typename X, typename F>
auto traverse_layer(const Desc& d, F f, const Layer<X>& layer)
    -> std::optional<Layer<typename decltype(f(std::declval<std::vector<Sort>>(),
                                               std::declval<Sort>(),
                                               std::declval<X>()))::value_type>> {
  using Y = typename decltype(f(std::declval<std::vector<Sort>>(), std::declval<Sort>(),
                                std::declval<X>()))::value_type;
  Layer<Y> out;
  Desc cursor = d;
  std::size_t i = 0;
  for (;; ++i) {
    if (cursor.kind() == Desc::Kind::Done) {
      if (i != layer.events.size())
        throw Error("traverse_layer: trailing events after the description ended");
      return out;
    }
    if (i >= layer.events.size())
      throw Error("traverse_layer: layer ended before the description");
    const auto& ev = layer.events[i];
    if (cursor.kind() == Desc::Kind::Sigma) {
      if (!std::holds_alternative<PayloadValue>(ev))
        throw Error("traverse_layer: expected a payload event at position " + std::to_string(i));
      const auto& p = std::get<PayloadValue>(ev);
      out.events.emplace_back(p);
      cursor = cursor.apply(p);
    } else {
      if (!std::holds_alternative<SubEvent<X>>(ev))
        throw Error("traverse_layer: expected a substructure event at position " +
                    std::to_string(i));
      const auto& sub = std::get<SubEvent<X>>(ev);
      auto y = f(sub.telescope, sub.sort, sub.child);
      if (!y) return std::nullopt;
      out.events.emplace_back(SubEvent<Y>{sub.telescope, sub.sort, std::move(*y)});
      cursor = cursor.rest();
    }
  }
}

/// Node count: 1 per variable, 1 + children for a constructor.
std::size_t size(const Term& t);

}  // namespace binderkit

#endif
