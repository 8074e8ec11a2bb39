#ifndef BINDERKIT_SORTS_HPP
#define BINDERKIT_SORTS_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace binderkit {

/// Simple types: a base type and the arrow. Immutable, shared, cheap to copy.
class SimpleType {
 public:
  static SimpleType alpha();
  static SimpleType arrow(SimpleType dom, SimpleType cod);

  bool is_arrow() const;
  const SimpleType& dom() const;  // arrow only
  const SimpleType& cod() const;  // arrow only

  bool operator==(const SimpleType& other) const;
  bool operator!=(const SimpleType& other) const { return !(*this == other); }

  std::size_t node_count() const;
  std::string show() const;  // "alpha" | "(-> dom cod)"

 private:
  struct Node;
  explicit SimpleType(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

/// The runtime value of a sort. Each built-in syntax only uses a slice of
/// this closed universe: unit for the untyped languages, the two modes for
/// the bidirectional one, simple types for the annotated one.
class Sort {
 public:
  enum class Kind { Unit, Infer, Check, Type };

  static Sort unit();
  static Sort infer();
  static Sort check();
  static Sort of_type(SimpleType t);

  Kind kind() const { return kind_; }
  bool is_type() const { return kind_ == Kind::Type; }
  const SimpleType& type() const;

  bool operator==(const Sort& other) const;
  bool operator!=(const Sort& other) const { return !(*this == other); }

  std::string show() const;

 private:
  Sort(Kind k, std::optional<SimpleType> t) : kind_(k), type_(std::move(t)) {}
  Kind kind_;
  std::optional<SimpleType> type_;
};

/// Per-syntax view of the sorts: decidable equality, a canonical textual
/// encoding, and a bounded enumerator feeding the generators.
struct SortDomain {
  std::string name;
  std::function<bool(const Sort&, const Sort&)> eq;
  std::function<std::string(const Sort&)> encode;
  std::function<std::optional<Sort>(const std::string&)> decode;
  std::function<std::vector<Sort>(std::size_t bound)> enumerate;
};

const SortDomain& unit_sort_domain();
const SortDomain& mode_sort_domain();
const SortDomain& type_sort_domain();

/// All simple types with at most `bound` nodes, smallest first.
std::vector<SimpleType> enumerate_types(std::size_t bound);

}  // namespace binderkit

#endif
