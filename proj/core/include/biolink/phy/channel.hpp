#pragma once

#include <random>
#include <span>
#include <vector>

namespace biolink::phy {

using Rng = std::mt19937_64;

/// Adds zero-mean Gaussian noise of variance signal_energy / 10^(snr_db/10).
/// snr_db = +inf returns the input untouched.
std::vector<double> awgn(std::span<const double> symbols, double snr_db, Rng& rng,
                         double signal_energy);

/// As above with the signal energy measured from `symbols`.
std::vector<double> awgn(std::span<const double> symbols, double snr_db, Rng& rng);

}  // namespace biolink::phy
