#include <benchmark/benchmark.h>

#include "jamopt/closed_form.hpp"
#include "jamopt/lambert.hpp"
#include "jamopt/monte_carlo.hpp"
#include "jamopt/sweeps.hpp"

namespace {

const jamopt::SystemParams kRef = jamopt::SystemParams::defaults();

void BM_LambertW0(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jamopt::lambert_w0(x));
    x = x < 1e6 ? x * 1.7 : 0.1;
  }
}
BENCHMARK(BM_LambertW0);

void BM_LambertW0OfExp(benchmark::State& state) {
  double ln_x = -20.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jamopt::lambert_w0_of_exp(ln_x));
    ln_x = ln_x < 1e4 ? ln_x + 7.3 : -20.0;
  }
}
BENCHMARK(BM_LambertW0OfExp);

void BM_PsiInv(benchmark::State& state) {
  double q = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jamopt::psi_inv(kRef, jamopt::PowerLinear{q}));
    q = q < kRef.q_max ? q * 2.3 : 1e-6;
  }
}
BENCHMARK(BM_PsiInv);

void BM_SolveOptimal(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(jamopt::solve_optimal(kRef));
  }
}
BENCHMARK(BM_SolveOptimal);

void BM_EstimateOutages(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(jamopt::estimate_outages(
        kRef, jamopt::RateBpsHz{2.0}, jamopt::PowerLinear{1.0}, n, 42));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_EstimateOutages)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_GridSearch(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(jamopt::grid_search_optimal(kRef, 20000));
  }
  state.SetLabel("20000 grid points");
}
BENCHMARK(BM_GridSearch)->Unit(benchmark::kMillisecond);

void BM_SweepQ(benchmark::State& state) {
  const auto grid = jamopt::default_q_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(jamopt::sweep_q(kRef, grid));
  }
}
BENCHMARK(BM_SweepQ)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
