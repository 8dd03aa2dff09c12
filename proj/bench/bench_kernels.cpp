#include <benchmark/benchmark.h>

#include "khtot/fixtures.hpp"
#include "khtot/perturbations.hpp"

using namespace khtot;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) ? Execution::Parallel : Execution::Serial;
}

void BM_AssembleH1(benchmark::State& state) {
  const CubeComplex cube(figure4_diagram(5));
  for (auto _ : state) benchmark::DoNotOptimize(cube.assemble(TermKind::H, 1, exec_of(state)));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_AssembleH3(benchmark::State& state) {
  const CubeComplex cube(figure4_diagram(5));
  for (auto _ : state) benchmark::DoNotOptimize(cube.assemble(TermKind::H, 3, exec_of(state)));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_IdentityH1H3(benchmark::State& state) {
  const CubeComplex cube(named_knot("figure_eight"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_identity(cube, Identity::H1H3H2Squared, exec_of(state)));
  }
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

void BM_HomologyBlocks(benchmark::State& state) {
  const auto d = figure4_diagram(6);
  for (auto _ : state) benchmark::DoNotOptimize(khovanov_homology(d, 10, exec_of(state)));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_AssembleH1)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssembleH3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentityH1H3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomologyBlocks)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
