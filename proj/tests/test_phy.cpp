#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "biolink/link/reference.hpp"
#include "biolink/phy/ber.hpp"
#include "biolink/phy/channel.hpp"
#include "biolink/phy/modulation.hpp"
#include "doctest.h"

using namespace biolink;
using namespace biolink::phy;

namespace {

std::vector<std::uint8_t> random_bits(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::uint8_t> b(n);
  for (auto& x : b) x = static_cast<std::uint8_t>(rng() & 1u);
  return b;
}

double mean_energy(const std::vector<double>& s) {
  return std::inner_product(s.begin(), s.end(), s.begin(), 0.0) / static_cast<double>(s.size());
}

PhyConfig config(ModScheme m, CodeScheme c, std::uint64_t seed = 1) {
  PhyConfig cfg;
  cfg.modulation = m;
  cfg.code = c;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_SUITE("phy") {

TEST_CASE("symbol mapping") {
  const std::vector<std::uint8_t> bits{0, 1};
  CHECK(modulate(bits, ModScheme::Bpsk) == std::vector<double>{-1.0, 1.0});
  CHECK(modulate(bits, ModScheme::Ask) == std::vector<double>{0.0, 2.0});
  CHECK(modulate(bits, ModScheme::Bpsk, 0.5) == std::vector<double>{-0.5, 0.5});
}

TEST_CASE("threshold receiver and ties") {
  const std::vector<double> bpsk{-0.001, 0.0, 0.001};
  CHECK(demodulate(bpsk, ModScheme::Bpsk) == std::vector<std::uint8_t>{0, 1, 1});
  const std::vector<double> ask{0.999, 1.0, 1.2};
  CHECK(demodulate(ask, ModScheme::Ask) == std::vector<std::uint8_t>{0, 1, 1});
  const auto bits = random_bits(1000, 3);
  for (auto m : {ModScheme::Ask, ModScheme::Bpsk}) CHECK(demodulate(modulate(bits, m), m) == bits);
}

TEST_CASE("average symbol energy") {
  const auto bits = random_bits(1'000'000, 5);
  const double e_bpsk = mean_energy(modulate(bits, ModScheme::Bpsk));
  const double e_ask = mean_energy(modulate(bits, ModScheme::Ask));
  CHECK(e_bpsk == doctest::Approx(average_symbol_energy(ModScheme::Bpsk)).epsilon(0.01));
  CHECK(e_ask == doctest::Approx(average_symbol_energy(ModScheme::Ask)).epsilon(0.01));
  CHECK(e_ask / e_bpsk == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("AWGN variance, determinism and the noiseless limit") {
  const std::vector<double> zeros(1'000'000, 0.0);
  Rng rng(9);
  const auto out = awgn(zeros, 3.0, rng, 1.0);
  const double target = 1.0 / std::pow(10.0, 0.3);
  CHECK(mean_energy(out) == doctest::Approx(target).epsilon(0.01));

  const auto bits = random_bits(1000, 2);
  const auto sym = modulate(bits, ModScheme::Bpsk);
  Rng a(42), b(42);
  CHECK(awgn(sym, 5.0, a) == awgn(sym, 5.0, b));
  Rng c(1);
  CHECK(awgn(sym, std::numeric_limits<double>::infinity(), c) == sym);
}

TEST_CASE("closed-form BER") {
  CHECK(q_function(0.0) == doctest::Approx(0.5));
  CHECK(ber_theory(ModScheme::Bpsk, 0.0) == doctest::Approx(0.0786496).epsilon(1e-5));
  for (double e = -2.0; e <= 12.0; e += 1.0) CHECK(ber_theory(ModScheme::Ask, e) >= ber_theory(ModScheme::Bpsk, e));
  CHECK(ber_theory(ModScheme::Bpsk, 40.0) == 0.0);
}

TEST_CASE("uncoded Monte Carlo against theory") {
  for (auto m : {ModScheme::Bpsk, ModScheme::Ask}) {
    for (double e : {0.0, 2.0, 4.0, 6.0, 8.0}) {
      CAPTURE(e);
      const auto r = ber_monte_carlo(config(m, CodeScheme::None, 100 + static_cast<int>(e)), e);
      CHECK(std::abs(r.ber - ber_theory(m, e)) <= 3.0 * r.std_error());
    }
  }
}

TEST_CASE("coding gain at high SNR") {
  for (double e : {7.0, 8.0}) {
    const auto none = ber_monte_carlo(config(ModScheme::Bpsk, CodeScheme::None), e);
    const auto ham = ber_monte_carlo(config(ModScheme::Bpsk, CodeScheme::Hamming15_11), e);
    const auto rs = ber_monte_carlo(config(ModScheme::Bpsk, CodeScheme::Rs31_26), e);
    CHECK(ham.ber < none.ber);
    CHECK(rs.ber < none.ber);
  }
}

TEST_CASE("no errors at very high SNR, flagged as low confidence") {
  PhyConfig cfg = config(ModScheme::Bpsk, CodeScheme::Rs31_26);
  cfg.max_bits = 200'000;
  const auto r = ber_monte_carlo(cfg, 60.0);
  CHECK(r.errors == 0);
  CHECK(r.ber == 0.0);
  CHECK(r.bits >= cfg.max_bits);
  CHECK(r.low_confidence);
}

TEST_CASE("stopping rule") {
  const auto r = ber_monte_carlo(config(ModScheme::Bpsk, CodeScheme::None), 2.0);
  CHECK(r.bits >= 100'000);
  CHECK(r.errors >= 100);
  CHECK_FALSE(r.low_confidence);
  CHECK(r.bits % block_info_bits(CodeScheme::None) == 0);
}

TEST_CASE("results depend on the seed only") {
  for (auto c : {CodeScheme::None, CodeScheme::Hamming15_11, CodeScheme::Rs31_26}) {
    PhyConfig one = config(ModScheme::Bpsk, c, 77);
    PhyConfig many = one;
    many.workers = 3;
    const auto a = ber_monte_carlo(one, 4.0);
    const auto b = ber_monte_carlo(one, 4.0);
    const auto d = ber_monte_carlo(many, 4.0);
    CHECK(a.bits == b.bits);
    CHECK(a.errors == b.errors);
    CHECK(a.bits == d.bits);
    CHECK(a.errors == d.errors);
  }
}

TEST_CASE("BER falls with SNR") {
  double prev = 1.0, prev_se = 0.0;
  for (double e = 0.0; e <= 8.0; e += 2.0) {
    const auto r = ber_monte_carlo(config(ModScheme::Bpsk, CodeScheme::Hamming15_11, 5), e);
    CHECK(r.ber <= prev + 3.0 * std::hypot(r.std_error(), prev_se));
    prev = r.ber;
    prev_se = r.std_error();
  }
}

TEST_CASE("BER against distance uses the code-rate adjusted Eb/N0") {
  const std::vector<double> d{0.05, 0.06};
  const auto pts = ber_vs_distance(link::reference_config(), link::reference_noise(),
                                   config(ModScheme::Bpsk, CodeScheme::Hamming15_11), d);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].ebn0_db == doctest::Approx(pts[0].snr_db - 10 * std::log10(11.0 / 15.0)));
  CHECK(pts[0].result.ber <= pts[1].result.ber);
}

}
