#ifndef BINDERKIT_CYCLIC_HPP
#define BINDERKIT_CYCLIC_HPP

#include <memory>
#include <optional>

#include "binderkit/syntactic.hpp"

namespace binderkit {

struct CoSub;
using CoEvent = std::variant<PayloadValue, CoSub>;

/// One forced layer of a cofinite tree, binding structure erased.
struct CoLayer {
  std::vector<CoEvent> events;
};

/// A lazily unfolded cofinite tree, one layer at a time. Forcing
/// memoises; a tree being forced must not be shared across threads.
class CoTree {
 public:
  static CoTree defer(std::function<CoLayer()> produce);
  const CoLayer& force() const;

 private:
  struct Cell;
  explicit CoTree(std::shared_ptr<Cell> c) : cell_(std::move(c)) {}
  std::shared_ptr<Cell> cell_;
};

struct CoSub {
  CoTree child;
};

/// Substitutes a closed term for every free variable of an open one,
/// reusing the substitution semantics.
Term plug(const Desc& d, const Term& closed_term, const Ctx& ctx, const Term& open_term);

/// Exposes the top layer of a closed term, re-plugging the term itself
/// for the self-references each substructure binds. Telescopes are
/// consumed in the process, so the resulting children are closed.
Layer<Term> unroll(const Desc& d, const Term& closed_term);

/// The cofinite unfolding of a closed term.
CoTree unfold(const Desc& d, const Term& closed_term);

/// A finite prefix of a cofinite tree.
struct FTree {
  std::vector<PayloadValue> payloads;
  std::vector<FTree> children;
  bool truncated = false;  // depth ran out before this layer was forced
};

FTree take_depth(const CoTree& tree, std::size_t depth);

struct BisimResult {
  bool ok = true;
  std::vector<std::size_t> path;  // event indices to the first mismatch

  std::string show() const;
};

/// Layer-by-layer comparison to the given depth; depth 0 is trivially yes.
BisimResult bisim_depth(const CoTree& a, const CoTree& b, std::size_t depth);

}  // namespace binderkit

#endif
