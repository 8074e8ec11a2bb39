#ifndef BINDERKIT_EQUALITY_HPP
#define BINDERKIT_EQUALITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "binderkit/term.hpp"

namespace binderkit {

bool eq_var(const Var& a, const Var& b);

/// Where two terms first diverge: the event indices walked from the root,
/// plus what differed there.
struct TermDiff {
  std::vector<std::size_t> path;
  std::string reason;

  std::string show() const;
};

/// First structural mismatch between two terms of the same description,
/// payloads compared through their domains; nullopt when the terms are
/// identical.
std::optional<TermDiff> term_diff(const Desc& d, const Term& a, const Term& b);

inline bool eq_term(const Desc& d, const Term& a, const Term& b) {
  return !term_diff(d, a, b).has_value();
}

}  // namespace binderkit

#endif
