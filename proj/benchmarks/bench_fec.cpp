#include <benchmark/benchmark.h>

#include <random>

#include "biolink/fec/hamming.hpp"
#include "biolink/fec/reed_solomon.hpp"

using namespace biolink::fec;

static RsMessage random_message(std::mt19937_64& rng) {
  RsMessage m;
  for (auto& s : m) s = Gf32::from_raw(static_cast<std::uint8_t>(rng() % 32));
  return m;
}

static void BM_RsEncode(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto msg = random_message(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rs_encode(msg));
}
BENCHMARK(BM_RsEncode);

static void BM_RsEncodeLfsr(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto msg = random_message(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rs_encode_lfsr(msg));
}
BENCHMARK(BM_RsEncodeLfsr);

// Arg: symbol errors injected per word.
static void BM_RsDecode(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto word = rs_encode(random_message(rng));
  for (int e = 0; e < state.range(0); ++e) word[e * 7] += Gf32(5);
  for (auto _ : state) benchmark::DoNotOptimize(rs_decode(word));
}
BENCHMARK(BM_RsDecode)->Arg(0)->Arg(1)->Arg(2)->Arg(3);

static void BM_HammingRoundTrip(benchmark::State& state) {
  HammingMessage msg{1, 0, 1, 1, 0, 0, 1, 0, 1, 1, 1};
  for (auto _ : state) {
    auto cw = hamming_encode(msg);
    cw[3] ^= 1u;
    benchmark::DoNotOptimize(hamming_decode(cw));
  }
}
BENCHMARK(BM_HammingRoundTrip);

BENCHMARK_MAIN();
