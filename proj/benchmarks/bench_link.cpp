#include <benchmark/benchmark.h>

#include "vdh/homology.hpp"
#include "vdh/stein_farley.hpp"

using namespace vdh;

namespace {

void BM_descending_link(benchmark::State& state) {
  auto g = build_group(2, 1, {});
  CompleteTree t = comb_tree(2, static_cast<std::size_t>(state.range(0)) - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(descending_link(t, g, 9));
  }
}
BENCHMARK(BM_descending_link)->Arg(5)->Arg(6)->Arg(7);

void BM_link_homology(benchmark::State& state) {
  auto g = build_group(2, 1, {});
  CompleteTree t = comb_tree(2, static_cast<std::size_t>(state.range(0)) - 1);
  DescendingLink link = descending_link(t, g, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduced_homology(link.link));
  }
}
BENCHMARK(BM_link_homology)->Arg(5)->Arg(6)->Arg(7);

}  // namespace
