#include <benchmark/benchmark.h>

#include "biolink/link/reference.hpp"
#include "biolink/phy/ber.hpp"

using namespace biolink;

// Fixed-size run: min_bits = max_bits so every iteration simulates the same work.
static void BM_BerMonteCarlo(benchmark::State& state) {
  phy::PhyConfig cfg;
  cfg.code = static_cast<phy::CodeScheme>(state.range(0));
  cfg.min_bits = cfg.max_bits = 200'000;
  for (auto _ : state) benchmark::DoNotOptimize(phy::ber_monte_carlo(cfg, 4.0));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.max_bits));
}
BENCHMARK(BM_BerMonteCarlo)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_LinkBudget(benchmark::State& state) {
  const auto cfg = link::reference_config();
  const auto noise = link::reference_noise();
  for (auto _ : state) benchmark::DoNotOptimize(link::link_budget(cfg, noise));
}
BENCHMARK(BM_LinkBudget);

BENCHMARK_MAIN();
