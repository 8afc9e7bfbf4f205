#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "biolink/fec/gf32.hpp"

namespace biolink::fec {

/// 5 bits per symbol, most significant bit first.
std::vector<std::uint8_t> symbols_to_bits(std::span<const Gf32> symbols);

/// Inverse of symbols_to_bits. Throws ArgumentError if the bit count is not
/// a multiple of five.
std::vector<Gf32> bits_to_symbols(std::span<const std::uint8_t> bits);

}  // namespace biolink::fec
