#ifndef BINDERKIT_PAYLOAD_HPP
#define BINDERKIT_PAYLOAD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "binderkit/sorts.hpp"

namespace binderkit {

class PayloadValue;

/// The closed universe of payload carriers a description may store at a
/// node. Every domain has decidable equality on its values, so term
/// equality is decidable for every syntax built from it.
class PayloadDomain {
 public:
  enum class Kind { Bool, Nat, Text, SortD, Tag, Pair };

  static PayloadDomain boolean();
  static PayloadDomain nat();
  static PayloadDomain text();
  static PayloadDomain sort();
  static PayloadDomain tag(std::vector<std::string> labels);  // labels must be distinct
  static PayloadDomain pair(PayloadDomain first, PayloadDomain second);

  Kind kind() const;
  const std::vector<std::string>& labels() const;  // Tag only
  PayloadDomain first() const;                     // Pair only
  PayloadDomain second() const;                    // Pair only

  /// Does `v` inhabit this domain?
  bool admits(const PayloadValue& v) const;

  std::string show() const;

 private:
  struct Node;
  explicit PayloadDomain(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

/// A value inhabiting exactly one PayloadDomain.
class PayloadValue {
 public:
  enum class Kind { Bool, Nat, Text, SortV, Tag, Pair };

  static PayloadValue boolean(bool b);
  static PayloadValue nat(std::uint64_t n);
  static PayloadValue text(std::string s);
  static PayloadValue sort(Sort s);
  static PayloadValue tag(std::size_t index, std::string label);
  static PayloadValue pair(PayloadValue first, PayloadValue second);

  Kind kind() const;
  bool as_bool() const;
  std::uint64_t as_nat() const;
  const std::string& as_text() const;
  const Sort& as_sort() const;
  std::size_t tag_index() const;
  const std::string& tag_label() const;
  PayloadValue first() const;
  PayloadValue second() const;

  /// Structural equality, independent of any carrying domain.
  bool operator==(const PayloadValue& other) const;
  bool operator!=(const PayloadValue& other) const { return !(*this == other); }

  std::string show() const;

 private:
  struct Node;
  explicit PayloadValue(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

/// Decides equality of two values of `domain`. Throws Error if either
/// value does not inhabit the domain.
bool payload_eq(const PayloadDomain& domain, const PayloadValue& a, const PayloadValue& b);

/// Bounds used when enumerating payload values for generators and
/// bounded exploration.
struct EnumerationHints {
  std::uint64_t nat_bound = 3;                           // nats 0..nat_bound
  std::vector<Sort> sorts;                               // candidates for SortD
  std::vector<std::string> texts = {"s", "t"};           // candidates for TextD
};

/// All values of `domain` under the given hints.
std::vector<PayloadValue> enumerate_payloads(const PayloadDomain& domain,
                                             const EnumerationHints& hints);

}  // namespace binderkit

#endif
