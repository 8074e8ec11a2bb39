#ifndef BINDERKIT_SUGAR_HPP
#define BINDERKIT_SUGAR_HPP

#include "binderkit/builtin.hpp"
#include "binderkit/syntactic.hpp"

namespace binderkit {

/// Usage tally for one variable.
enum class Counter { Zero, One, Many };

/// Saturating addition: zero is the unit, anything else collapses to many.
Counter counter_add(Counter a, Counter b);

const char* counter_label(Counter c);

/// A tally per variable in scope, innermost first.
struct Count {
  std::vector<Counter> entries;

  bool operator==(const Count& other) const { return entries == other.entries; }
};

Count zeros(std::size_t scope_size);
Count from_var(const Var& v, std::size_t scope_size);
Count merge(const Count& a, const Count& b);
/// Uses one counter to decide whether an existing count survives: a zero
/// control erases it.
Count control(Counter c, const Count& k);

/// Removes every let node of a sum(d, let) term by substituting the bound
/// expression, using the substitution algebra for all other constructors.
Term unlet(const Desc& d, const Ctx& ctx, const Term& t);

/// Annotates every let with how often its variable is used in its body,
/// returning the rewritten sum(d, clet) term and the tally for the free
/// variables. A bound expression only contributes to the ambient tally
/// when its variable is actually used.
std::pair<Term, Count> annotate(const Desc& d, const Ctx& ctx, const Term& t);

/// Inlines the lets whose variable is used at most once: zero-tagged lets
/// drop their bound expression, one-tagged lets substitute it, many-tagged
/// lets survive with the counter erased.
Term inline_lets(const Desc& d, const Ctx& ctx, const Term& t);

/// A counted-let node of sum(d, clet); test and tooling plumbing.
Term clet_term(Counter c, Sort bound_sort, Sort body_sort, Term bound, Term body);

}  // namespace binderkit

#endif
