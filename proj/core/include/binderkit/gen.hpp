#ifndef BINDERKIT_GEN_HPP
#define BINDERKIT_GEN_HPP

#include "binderkit/builtin.hpp"
#include "binderkit/rng.hpp"
#include "binderkit/scope.hpp"

namespace binderkit {

struct GenConfig {
  std::uint64_t seed = 42;
  std::size_t max_depth = 6;  // must be >= 1
  Ctx context;
  Sort sort = Sort::unit();
};

struct UnsatisfiableSort {
  std::string message;
};

/// Draws a valid term of the syntax at the requested sort: deterministic
/// for a fixed seed, depth-bounded, variables chosen uniformly among
/// sort-compatible entries. Near the depth limit only variables and
/// recursion-free constructor paths remain; if nothing can produce the
/// sort within the depth, that is reported rather than looped on.
Result<Term, UnsatisfiableSort> gen_term(const Syntax& syntax, const GenConfig& config);

/// In-place variant drawing from a caller-owned generator, for test
/// harnesses sampling many terms.
Result<Term, UnsatisfiableSort> gen_term(const Syntax& syntax, Rng& rng, const Ctx& ctx,
                                         const Sort& sort, std::size_t max_depth);

}  // namespace binderkit

#endif
