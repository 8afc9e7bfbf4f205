#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace biolink::phy {

enum class ModScheme { Ask, Bpsk };

std::string_view to_string(ModScheme s);

/// BPSK: 0 -> -A, 1 -> +A. ASK (on-off): 0 -> 0, 1 -> 2A.
std::vector<double> modulate(std::span<const std::uint8_t> bits, ModScheme scheme,
                             double amplitude = 1.0);

/// Mean symbol energy of `scheme` for equiprobable bits: A^2 for BPSK, 2A^2
/// for on-off ASK.
double average_symbol_energy(ModScheme scheme, double amplitude = 1.0);

/// Threshold receiver: BPSK at 0, ASK at A. Ties decide 1.
std::vector<std::uint8_t> demodulate(std::span<const double> symbols, ModScheme scheme,
                                     double amplitude = 1.0);

}  // namespace biolink::phy
