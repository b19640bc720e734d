#include <benchmark/benchmark.h>

#include "unistab/hom_count.hpp"
#include "unistab/tietze.hpp"
#include "unistab/two_bridge.hpp"
#include "unistab/wirtinger.hpp"

using namespace unistab;

namespace {

GroupPresentation knot_group(std::vector<long> terms) {
  return wirtinger(two_bridge_plat({std::move(terms)}));
}

void BM_CountSixThreeS4(benchmark::State& state) {
  const GroupPresentation p = tietze_simplify(knot_group({2, 1, 1, 2}));
  const auto g = builtin_group("S4");
  const CountOptions opts{std::uint64_t{1} << 40, state.range(0) != 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(count_homs(p, g, opts));
}
BENCHMARK(BM_CountSixThreeS4)->Arg(0)->Arg(1);

void BM_CountA5Jobs(benchmark::State& state) {
  const GroupPresentation p = parse_presentation("gens 3\ng1 g2 g1 G2 G1 G2\ng3 g1 g3 G1 G3 G1\n");
  const auto g = builtin_group("A5");
  const CountOptions opts{std::uint64_t{1} << 40, false, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(count_homs(p, g, opts));
}
BENCHMARK(BM_CountA5Jobs)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_WirtingerAndSimplify(benchmark::State& state) {
  const PlanarDiagram d = two_bridge_plat({{3, 2, 3, 2, 3}});
  for (auto _ : state) benchmark::DoNotOptimize(tietze_simplify(wirtinger(d)));
}
BENCHMARK(BM_WirtingerAndSimplify);

}  // namespace

BENCHMARK_MAIN();
