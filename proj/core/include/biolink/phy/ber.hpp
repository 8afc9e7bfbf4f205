#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "biolink/common/seed.hpp"
#include "biolink/link/link_budget.hpp"
#include "biolink/phy/modulation.hpp"

namespace biolink::phy {

enum class CodeScheme { None, Hamming15_11, Rs31_26 };

std::string_view to_string(CodeScheme c);
double code_rate(CodeScheme c);

/// Gaussian tail probability.
double q_function(double x);

/// Closed-form coherent BER: BPSK Q(sqrt(2 Eb/N0)), on-off ASK Q(sqrt(Eb/N0)).
double ber_theory(ModScheme scheme, double ebn0_db);

struct PhyConfig {
  ModScheme modulation = ModScheme::Bpsk;
  CodeScheme code = CodeScheme::None;
  std::uint64_t min_bits = 100'000;   // information bits simulated at least
  std::uint64_t min_errors = 100;
  std::uint64_t max_bits = 10'000'000;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  double amplitude = 1.0;
};

struct BerResult {
  double ber = 0.0;
  std::uint64_t bits = 0;
  std::uint64_t errors = 0;
  /// max_bits was reached before min_errors errors were seen.
  bool low_confidence = false;

  /// Binomial standard error of the estimate.
  double std_error() const {
    return bits ? std::sqrt(std::max(ber * (1.0 - ber), 1.0 / bits) / bits) : 1.0;
  }
};

/// Information bits carried by one Monte Carlo block.
std::uint64_t block_info_bits(CodeScheme c);

/// Random info bits -> encode -> modulate -> AWGN -> demodulate -> decode,
/// counting information-bit errors. `ebn0_db` is per information bit.
/// Blocks are seeded by (cfg.seed, block index) and tallied in index order,
/// so the result does not depend on cfg.workers.
BerResult ber_monte_carlo(const PhyConfig& cfg, double ebn0_db);

struct BerPoint {
  double distance = 0.0;
  double snr_db = 0.0;   // symbol SNR at the reader
  double ebn0_db = 0.0;  // per information bit
  BerResult result;
};

/// Eb/N0 per distance from the link budget (symbol rate equal to the noise
/// bandwidth, so Eb/N0 = SNR - 10 log10(rate)), then ber_monte_carlo with
/// seed derive_seed(cfg.seed, distance index).
std::vector<BerPoint> ber_vs_distance(const link::LinkConfig& link,
                                      const link::NoiseModel& noise, const PhyConfig& cfg,
                                      std::span<const double> distances);

}  // namespace biolink::phy
