// Serial reference paths against the OpenMP kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <vector>

#include "mfc/cli.hpp"
#include "mfc/configurations.hpp"
#include "mfc/criticality.hpp"
#include "mfc/decomp.hpp"
#include "mfc/enumerate.hpp"
#include "mfc/exec.hpp"

using namespace mfc;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_AllGraphs(benchmark::State& state) {
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(all_graphs(static_cast<int>(state.range(1)), exec));
}
BENCHMARK(BM_AllGraphs)->ArgsProduct({{0, 1}, {7, 8}})->Unit(benchmark::kMillisecond);

void BM_KfcSweep(benchmark::State& state) {
  const Exec exec = exec_of(state);
  const Graph g = random_graph(14, 0.85, 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_minimal_kfc(g, 4, exec));
}
BENCHMARK(BM_KfcSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BarrierSearch(benchmark::State& state) {
  const Exec exec = exec_of(state);
  const HostInstance inst = build_instance(ConfigLabel::C14, 12);
  for (auto _ : state) benchmark::DoNotOptimize(find_barrier_witnesses(inst.core, 10, exec));
}
BENCHMARK(BM_BarrierSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_VerifySweep(benchmark::State& state) {
  const Exec exec = exec_of(state);
  const std::vector<Graph> graphs = all_graphs(8);
  for (auto _ : state) {
    auto records = ordered_map<cli::VerificationRecord>(graphs.size(), exec,
                                                        [&](std::size_t i) { return cli::verify_graph(graphs[i], 2); });
    benchmark::DoNotOptimize(records);
  }
}
BENCHMARK(BM_VerifySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
