#include <benchmark/benchmark.h>

#include "binderkit/gen.hpp"
#include "binderkit/nbe.hpp"
#include "binderkit/sugar.hpp"
#include "binderkit/syntactic.hpp"

using namespace binderkit;

namespace {

Term sample_term(std::uint64_t seed, std::size_t depth) {
  Rng rng(seed);
  Ctx ctx({Sort::unit()});
  auto t = gen_term(utlc_syntax(), rng, ctx, Sort::unit(), depth);
  return t.value();
}

// one free variable, `depth` alternating binders and applications
Term deep_term(std::size_t depth) {
  Term t = utlc::v(0);
  for (std::size_t i = 0; i < depth; ++i) t = utlc::lam(utlc::app(t, utlc::v(0)));
  return t;
}

void bench_ren(benchmark::State& state) {
  Term t = deep_term(static_cast<std::size_t>(state.range(0)));
  Ctx ctx({Sort::unit()});
  Thinning w = weaken(Sort::unit(), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(ren(utlc_desc(), w, t));
}
BENCHMARK(bench_ren)->Arg(16)->Arg(64)->Arg(256);

void bench_sub(benchmark::State& state) {
  Term t = deep_term(static_cast<std::size_t>(state.range(0)));
  Ctx ctx({Sort::unit()});
  Env<Term> rho = Env<Term>::from_values(ctx, ctx, {utlc::app(utlc::v(0), utlc::v(0))});
  for (auto _ : state) benchmark::DoNotOptimize(sub(utlc_desc(), rho, t));
}
BENCHMARK(bench_sub)->Arg(16)->Arg(64)->Arg(256);

void bench_norm(benchmark::State& state) {
  // a chain of identity redexes
  Term t = utlc::identity();
  for (int i = 0; i < state.range(0); ++i) t = utlc::app(utlc::identity(), t);
  for (auto _ : state) benchmark::DoNotOptimize(norm(utlc_desc(), utlc_alg, t));
}
BENCHMARK(bench_norm)->Arg(8)->Arg(32)->Arg(128);

void bench_gen(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_term(++seed, 8));
}
BENCHMARK(bench_gen);

void bench_inline(benchmark::State& state) {
  Rng rng(3);
  Ctx ctx({Sort::unit()});
  auto t = gen_term(utlc_let_syntax(), rng, ctx, Sort::unit(), 8);
  for (auto _ : state) {
    auto [annotated, count] = annotate(utlc_desc(), ctx, t.value());
    benchmark::DoNotOptimize(inline_lets(utlc_desc(), ctx, annotated));
  }
}
BENCHMARK(bench_inline);

}  // namespace

BENCHMARK_MAIN();
