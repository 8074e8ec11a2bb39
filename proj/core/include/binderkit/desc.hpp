#ifndef BINDERKIT_DESC_HPP
#define BINDERKIT_DESC_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "binderkit/payload.hpp"
#include "binderkit/sorts.hpp"

namespace binderkit {

/// A first-class code for one layer of a syntax with binding: stored
/// payloads (the rest of the code may depend on the stored value),
/// recursive positions with a telescope of newly bound sorts, and a
/// result sort. Continuations are opaque total callables, so
/// descriptions are constants of the library rather than data files.
class Desc {
 public:
  enum class Kind { Sigma, Rec, Done };

  static Desc sigma(PayloadDomain domain, std::function<Desc(const PayloadValue&)> rest);
  static Desc rec(std::vector<Sort> telescope, Sort sort, Desc rest);
  static Desc done(Sort sort);

  Kind kind() const;

  // Sigma accessors
  const PayloadDomain& domain() const;
  Desc apply(const PayloadValue& payload) const;

  // Rec accessors
  const std::vector<Sort>& telescope() const;
  const Sort& rec_sort() const;
  Desc rest() const;

  // Done accessor
  const Sort& done_sort() const;

 private:
  struct Node;
  explicit Desc(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

/// Binary choice between two descriptions over the same sorts: a boolean
/// payload picks the branch, true selecting the left one.
Desc sum(const Desc& left, const Desc& right);

/// One fully applied constructor shape: the payloads chosen at each Sigma,
/// the recursive positions passed on the way, and the final sort.
struct DescPath {
  std::vector<PayloadValue> payloads;
  std::vector<std::pair<std::vector<Sort>, Sort>> recs;  // (telescope, sort) in order
  Sort done;
};

/// Bounded exploration of every path through a description, enumerating
/// payload choices with the given hints. Throws Error if a path fails to
/// reach Done within `max_steps` events.
std::vector<DescPath> explore(const Desc& d, const EnumerationHints& hints,
                              std::size_t max_steps = 64);

}  // namespace binderkit

#endif
