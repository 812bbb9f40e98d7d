// Serial reference kernel against the OpenMP kernel on identical workloads.

#include <benchmark/benchmark.h>

#include "metacomm/oracle.hpp"
#include "metacomm/sweep.hpp"
#include "metacomm/verify.hpp"

using namespace metacomm;

namespace {

template <class Sweep>
void diagrams_exhaustive(benchmark::State& state, Sweep sweep) {
  const EichlerContext ctx(3, 1);
  const UnitResidues residues(ctx, static_cast<int>(state.range(0)));
  const OmegaCheck check = [&](const Mat2& w) { return diagrams_case(ctx, w); };
  for (auto _ : state) {
    const SuiteOutcome out = sweep("diagrams", residues, check);
    benchmark::DoNotOptimize(out.checked);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(residues.size()));
}

template <class Sweep>
void oracle_random(benchmark::State& state, Sweep sweep) {
  const EichlerContext ctx(static_cast<std::uint64_t>(state.range(0)), 2);
  const CensusForms forms(ctx);
  const OmegaList omegas = random_units(ctx, 256, 1);
  const OmegaCheck check = [&](const Mat2& w) { return oracle_case(ctx, forms, w); };
  for (auto _ : state) {
    const SuiteOutcome out = sweep("oracle", omegas, check);
    benchmark::DoNotOptimize(out.checked);
  }
  state.SetItemsProcessed(state.iterations() * 256);
}

void BM_DiagramsSerial(benchmark::State& s) { diagrams_exhaustive(s, sweep_serial); }
void BM_DiagramsParallel(benchmark::State& s) { diagrams_exhaustive(s, sweep_parallel); }
void BM_OracleSerial(benchmark::State& s) { oracle_random(s, sweep_serial); }
void BM_OracleParallel(benchmark::State& s) { oracle_random(s, sweep_parallel); }

}  // namespace

BENCHMARK(BM_DiagramsSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiagramsParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleSerial)->Arg(5)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(5)->Arg(13)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
