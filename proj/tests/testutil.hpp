#ifndef BINDERKIT_TESTS_TESTUTIL_HPP
#define BINDERKIT_TESTS_TESTUTIL_HPP

#include "binderkit/gen.hpp"
#include "binderkit/syntactic.hpp"

namespace binderkit::testutil {

inline Ctx unit_ctx(std::size_t n) {
  return Ctx(std::vector<Sort>(n, Sort::unit()));
}

inline std::vector<Sort> sort_pool(const Syntax& syntax) {
  if (syntax.name == "stlc") {
    std::vector<Sort> pool;
    for (const auto& t : enumerate_types(3)) pool.push_back(Sort::of_type(t));
    return pool;
  }
  if (syntax.name == "bidi") return {Sort::infer()};
  return {Sort::unit()};
}

inline Ctx sample_ctx(const Syntax& syntax, Rng& rng, std::size_t max_size = 3) {
  auto pool = sort_pool(syntax);
  std::vector<Sort> sorts;
  std::size_t n = 1 + rng.below(max_size);
  for (std::size_t i = 0; i < n; ++i) sorts.push_back(pool[rng.below(pool.size())]);
  return Ctx(std::move(sorts));
}

/// A scope plus a target sort drawn from it, so a variable can always
/// produce the sort and generation cannot be unsatisfiable.
inline std::pair<Ctx, Sort> sample_ctx_and_sort(const Syntax& syntax, Rng& rng,
                                                std::size_t max_size = 3) {
  Ctx ctx = sample_ctx(syntax, rng, max_size);
  Sort sort = ctx[rng.below(ctx.size())];
  return {ctx, sort};
}

inline Term must_gen(const Syntax& syntax, Rng& rng, const Ctx& ctx, const Sort& sort,
                     std::size_t depth) {
  auto t = gen_term(syntax, rng, ctx, sort, depth);
  if (!t) throw Error("test generator: " + t.error().message);
  return t.value();
}

/// A monotone sort-preserving injection into a sampled extension.
inline Thinning sample_thinning(const Syntax& syntax, Rng& rng, const Ctx& ctx) {
  auto pool = sort_pool(syntax);
  std::vector<Sort> target;
  std::vector<Var> image;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    std::size_t extra = rng.below(2);
    for (std::size_t k = 0; k < extra; ++k) target.push_back(pool[rng.below(pool.size())]);
    image.push_back(Var{target.size(), ctx[i]});
    target.push_back(ctx[i]);
  }
  if (rng.coin(1, 2)) target.push_back(pool[rng.below(pool.size())]);
  return Thinning::from_values(ctx, Ctx(std::move(target)), std::move(image));
}

inline Env<Term> sample_term_env(const Syntax& syntax, Rng& rng, const Ctx& ctx,
                                 std::size_t depth = 3) {
  Thinning shape = sample_thinning(syntax, rng, ctx);
  std::vector<Term> entries;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    entries.push_back(must_gen(syntax, rng, shape.target(), ctx[i], depth));
  return Env<Term>::from_values(ctx, shape.target(), std::move(entries));
}

}  // namespace binderkit::testutil

#endif
