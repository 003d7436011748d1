#include <benchmark/benchmark.h>

#include "marks/catalog.hpp"
#include "marks/group_algorithms.hpp"
#include "marks/kernels.hpp"

namespace {

using namespace marks;

const Group& s6() {
  static const Group g = build_group(*find_catalog_entry("S6"));
  return g;
}

const Group& l232() {
  static const Group g = build_group(*find_catalog_entry("L232"));
  return g;
}

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_CountInvolutions(benchmark::State& state) {
  const auto& elements = l232().elements().elements();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        count_elements(elements, [](const Permutation& g) { return g.order() == 2; }, exec_of(state)));
}
BENCHMARK(BM_CountInvolutions)->Arg(0)->Arg(1)->ArgName("omp");

void BM_Normalizer(benchmark::State& state) {
  const Group& g = s6();
  const Group h(6, {parse_perm("(1,2)(3,4)", 6), parse_perm("(1,3)(2,4)", 6)});
  for (auto _ : state) benchmark::DoNotOptimize(normalizer(g, h, exec_of(state)).order());
}
BENCHMARK(BM_Normalizer)->Arg(0)->Arg(1)->ArgName("omp");

void BM_Centralizer(benchmark::State& state) {
  const Group& g = l232();
  const Permutation x = g.generators()[0];
  for (auto _ : state) benchmark::DoNotOptimize(centralizer(g, x, exec_of(state)).order());
}
BENCHMARK(BM_Centralizer)->Arg(0)->Arg(1)->ArgName("omp");

void BM_ForEachIndexFixedPoints(benchmark::State& state) {
  const auto& elements = l232().elements().elements();
  std::vector<std::size_t> fixed(elements.size());
  for (auto _ : state) {
    for_each_index(elements.size(), [&](std::size_t i) { fixed[i] = elements[i].fixed_point_count(); },
                   exec_of(state));
    benchmark::DoNotOptimize(fixed.data());
  }
}
BENCHMARK(BM_ForEachIndexFixedPoints)->Arg(0)->Arg(1)->ArgName("omp");

}  // namespace

BENCHMARK_MAIN();
