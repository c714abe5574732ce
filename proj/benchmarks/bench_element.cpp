#include <benchmark/benchmark.h>

#include <random>

#include "vdh/element.hpp"

using namespace vdh;

namespace {

std::shared_ptr<const LocalGroup> z2() {
  return build_group(2, 2,
                     {{"a", parse_cycles("(0 1)", 2), parse_cycles("(0 1)", 2)}});
}

void BM_compose_reduce(benchmark::State& state) {
  auto g = z2();
  auto pool = generator_pool(g);
  std::mt19937_64 rng(1);
  SymTreePair x = sample_element(pool, rng, static_cast<std::size_t>(state.range(0)));
  SymTreePair y = sample_element(pool, rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(x, y));
  }
}
BENCHMARK(BM_compose_reduce)->Arg(4)->Arg(8)->Arg(16);

void BM_act(benchmark::State& state) {
  auto g = z2();
  auto pool = generator_pool(g);
  std::mt19937_64 rng(2);
  SymTreePair x = sample_element(pool, rng, 12);
  CantorPoint c(2, "0110", "10");
  for (auto _ : state) {
    benchmark::DoNotOptimize(act(x, c));
  }
}
BENCHMARK(BM_act);

void BM_bfs_ball(benchmark::State& state) {
  auto g = z2();
  auto gens = generator_pool(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bfs_ball(gens, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_bfs_ball)->Arg(2)->Arg(3);

}  // namespace
