#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "boolnet/bundled.hpp"
#include "boolnet/compiled.hpp"
#include "boolnet/dynamics.hpp"
#include "boolnet/ensemble.hpp"
#include "boolnet/schedule.hpp"

using namespace boolnet;

namespace {

// Successor table for 2^20 consecutive states of the 25-bit network.
void BM_SuccessorTable(benchmark::State& state) {
  const CompiledNetwork compiled(load_bundled("net29"));
  std::vector<std::uint32_t> out(std::size_t{1} << 20);
  for (auto _ : state) {
    compiled.successors(0, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * out.size()));
}
BENCHMARK(BM_SuccessorTable)->Unit(benchmark::kMillisecond);

void BM_ScalarStep(benchmark::State& state) {
  const Network net = load_bundled("net29");
  const auto sched = UpdateSchedule::parallel(net.dynamic_names());
  std::uint64_t code = 12345;
  for (auto _ : state) {
    code = step(net, State{code, net.width()}, sched).code ^ 0x155U;
    benchmark::DoNotOptimize(code);
  }
}
BENCHMARK(BM_ScalarStep);

void BM_Attractors(benchmark::State& state) {
  const Network net = load_bundled(state.range(0) == 0 ? "net14" : "net29");
  for (auto _ : state) benchmark::DoNotOptimize(find_attractors(net).attractors.size());
  state.SetLabel(net.name());
}
BENCHMARK(BM_Attractors)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateRepresentatives(benchmark::State& state) {
  const auto g = InteractionDigraph::of(load_bundled("net09_fitted"));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_representatives(g, [](const Representative&) {}));
}
BENCHMARK(BM_EnumerateRepresentatives)->Unit(benchmark::kMillisecond);

void BM_Ensemble(benchmark::State& state) {
  const Network net = load_bundled("net09");
  for (auto _ : state) benchmark::DoNotOptimize(analyze_ensemble(net).schedules);
}
BENCHMARK(BM_Ensemble)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
