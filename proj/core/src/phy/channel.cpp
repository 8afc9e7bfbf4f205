#include "biolink/phy/channel.hpp"

#include <cmath>

#include "biolink/common/units.hpp"

namespace biolink::phy {

std::vector<double> awgn(std::span<const double> symbols, double snr_db, Rng& rng,
                         double signal_energy) {
  std::vector<double> out(symbols.begin(), symbols.end());
  if (std::isinf(snr_db) && snr_db > 0.0) return out;
  const double sigma = std::sqrt(signal_energy / units::from_db(snr_db));
  std::normal_distribution<double> noise(0.0, sigma);
  for (double& s : out) s += noise(rng);
  return out;
}

std::vector<double> awgn(std::span<const double> symbols, double snr_db, Rng& rng) {
  double energy = 0.0;
  for (double s : symbols) energy += s * s;
  if (!symbols.empty()) energy /= static_cast<double>(symbols.size());
  return awgn(symbols, snr_db, rng, energy);
}

}  // namespace biolink::phy
