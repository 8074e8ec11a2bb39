#ifndef BINDERKIT_TYPING_HPP
#define BINDERKIT_TYPING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "binderkit/builtin.hpp"
#include "binderkit/semantics.hpp"

namespace binderkit {

bool type_eq(const SimpleType& a, const SimpleType& b);
std::optional<std::pair<SimpleType, SimpleType>> is_arrow(const SimpleType& t);

/// Types for the variables of a mode scope. Entries at mode Check carry
/// no type; looking one up is an error, and the checker refuses to build
/// an environment over such a scope in the first place.
class Typing {
 public:
  Typing() = default;

  static Typing of_infer_types(std::vector<SimpleType> types);
  /// Arbitrary mode mix: an absent entry is a Check variable.
  static Typing with_entries(std::vector<std::optional<SimpleType>> entries);

  Typing extended_infer(SimpleType type) const;  // new innermost Infer entry

  std::size_t size() const { return entries_.size(); }
  bool has_type(std::size_t i) const { return entries_[i].has_value(); }
  const SimpleType& type_at(std::size_t i) const;

  /// The mode context this typing covers: Infer wherever a type is
  /// recorded, Check elsewhere.
  Ctx modes() const;

  /// Erasure: the simple-type context of the Infer entries only.
  std::vector<SimpleType> erase() const;

  /// Index translation from the mode scope into the erased scope.
  std::size_t erased_index(std::size_t mode_index) const;

 private:
  std::vector<std::optional<SimpleType>> entries_;
};

/// The result of bidirectional type checking at one of the two modes.
struct TypeCheckOutcome {
  std::optional<SimpleType> inferred;                 // Infer terms
  std::function<bool(const SimpleType&)> check;       // Check terms
};

struct TypingError {
  std::string message;
};

/// Bidirectional type checking of a Bidi term, as a semantics whose
/// values attach a type to each Infer variable. A scope containing a
/// Check variable is rejected up front.
Result<TypeCheckOutcome, TypingError> typecheck(const Term& t, const Sort& mode,
                                                const Typing& typing);

/// Convenience: type inference for a closed Infer term.
std::optional<SimpleType> infer_closed(const Term& t);

/// Evidence-producing elaboration of Bidi into fully annotated terms: the
/// checker simultaneously produces the type and a term that validates
/// under the annotated description at that type in the erased context.
struct ElaborateOutcome {
  std::function<std::optional<std::pair<SimpleType, Term>>()> infer;  // Infer terms
  std::function<std::optional<Term>(const SimpleType&)> check;       // Check terms
};

Result<ElaborateOutcome, TypingError> elaborate(const Term& t, const Sort& mode,
                                                const Typing& typing);

/// Convenience: elaboration of a closed Infer term.
std::optional<std::pair<SimpleType, Term>> elaborate_closed(const Term& t);

}  // namespace binderkit

#endif
