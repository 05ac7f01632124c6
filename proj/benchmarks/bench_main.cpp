#include <benchmark/benchmark.h>

#include "ucplab/covering.hpp"
#include "ucplab/equivalence.hpp"
#include "ucplab/rand_builder.hpp"
#include "ucplab/symmetric.hpp"
#include "ucplab/ucp.hpp"

namespace {

using namespace ucplab;

void BM_UcpPsiAssume(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = n / 2;
  const CnfFormula f = psi(n, k);
  Propagator prop(f);
  std::vector<Lit> assumptions;
  for (int v = 1; v <= k; ++v) assumptions.push_back(Lit(v));
  for (auto _ : state) {
    benchmark::DoNotOptimize(prop.run(assumptions));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_UcpPsiAssume)->Arg(8)->Arg(10)->Arg(12);

void BM_AbsorbsPsiByPhiEll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = n / 2;
  const CnfFormula full = psi(n, k);
  const CnfFormula ell = phi_ell(n, k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(absorbs(ell, full));
  }
}
BENCHMARK(BM_AbsorbsPsiByPhiEll)->Arg(6)->Arg(8);

void BM_IrredundancyPhiEll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CnfFormula ell = phi_ell(n, n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_ucp_irredundant(ell));
  }
}
BENCHMARK(BM_IrredundancyPhiEll)->Arg(8)->Arg(10);

void BM_RestrictionCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = n / 2;
  const BuildResult build = build_connected_restrictions(n, k, 5, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(has_connected_restrictions(build.hypergraph));
  }
}
BENCHMARK(BM_RestrictionCheck)->Arg(10)->Arg(12)->Arg(14);

void BM_DirectedCheckTheta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = n / 2;
  const BuildResult build = build_connected_restrictions(n, k, 5, 42);
  const CnfFormula star = theta(build.hypergraph);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_ucp_equiv_to_psi_via_graphs(star));
  }
}
BENCHMARK(BM_DirectedCheckTheta)->Arg(10)->Arg(12)->Arg(14);

void BM_GreedyCover(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_cover(n, n / 2));
  }
}
BENCHMARK(BM_GreedyCover)->Arg(10)->Arg(12)->Arg(14);

void BM_BuildHstar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_connected_restrictions(n, n / 2, 5, seed++));
  }
}
BENCHMARK(BM_BuildHstar)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
