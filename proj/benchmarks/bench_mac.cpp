#include <benchmark/benchmark.h>

#include "biolink/mac/aloha.hpp"
#include "biolink/mac/cdma.hpp"

using namespace biolink::mac;

static void BM_AlohaSession(benchmark::State& state) {
  MacScenario sc;
  sc.n_motes = static_cast<int>(state.range(0));
  sc.rate_bps = 200e3;
  sc.read_time_s = 10.0;
  sc.frame_slots = 16;
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(aloha_simulate(sc, rng));
}
BENCHMARK(BM_AlohaSession)->Arg(10)->Arg(100)->Arg(250);

static void BM_CdmaTrial(benchmark::State& state) {
  CdmaScenario sc;
  sc.n_motes = static_cast<int>(state.range(0));
  sc.code_length = static_cast<int>(state.range(1));
  sc.family = CodeFamily::Random;
  sc.trials = 1;
  for (auto _ : state) benchmark::DoNotOptimize(cdma_simulate(sc));
}
BENCHMARK(BM_CdmaTrial)->Args({8, 64})->Args({24, 256})->Args({64, 256});

static void BM_CdmaChipLevel(benchmark::State& state) {
  Rng rng(3);
  const int n = static_cast<int>(state.range(0));
  const auto codes = assign_codes(n, CodeFamily::Random, 128, rng);
  MoteBits bits(static_cast<std::size_t>(n), std::vector<std::int8_t>(512, 1));
  for (auto _ : state) benchmark::DoNotOptimize(cdma_successes_chip_level(codes, bits));
}
BENCHMARK(BM_CdmaChipLevel)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
