#include "biolink/phy/modulation.hpp"

namespace biolink::phy {

std::string_view to_string(ModScheme s) { return s == ModScheme::Ask ? "ASK" : "BPSK"; }

std::vector<double> modulate(std::span<const std::uint8_t> bits, ModScheme scheme,
                             double amplitude) {
  std::vector<double> out(bits.size());
  if (scheme == ModScheme::Bpsk) {
    for (std::size_t i = 0; i < bits.size(); ++i) out[i] = bits[i] ? amplitude : -amplitude;
  } else {
    for (std::size_t i = 0; i < bits.size(); ++i) out[i] = bits[i] ? 2.0 * amplitude : 0.0;
  }
  return out;
}

double average_symbol_energy(ModScheme scheme, double amplitude) {
  const double a2 = amplitude * amplitude;
  return scheme == ModScheme::Bpsk ? a2 : 2.0 * a2;
}

std::vector<std::uint8_t> demodulate(std::span<const double> symbols, ModScheme scheme,
                                     double amplitude) {
  const double threshold = scheme == ModScheme::Bpsk ? 0.0 : amplitude;
  std::vector<std::uint8_t> out(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) out[i] = symbols[i] >= threshold ? 1 : 0;
  return out;
}

}  // namespace biolink::phy
