#include "biolink/fec/bits.hpp"

#include "biolink/common/errors.hpp"

namespace biolink::fec {

std::vector<std::uint8_t> symbols_to_bits(std::span<const Gf32> symbols) {
  std::vector<std::uint8_t> bits;
  bits.reserve(symbols.size() * 5);
  for (Gf32 s : symbols)
    for (int b = 4; b >= 0; --b) bits.push_back((s.value() >> b) & 1u);
  return bits;
}

std::vector<Gf32> bits_to_symbols(std::span<const std::uint8_t> bits) {
  if (bits.size() % 5 != 0) throw ArgumentError("bits_to_symbols: bit count not a multiple of 5");
  std::vector<Gf32> out;
  out.reserve(bits.size() / 5);
  for (std::size_t i = 0; i < bits.size(); i += 5) {
    std::uint8_t v = 0;
    for (int b = 0; b < 5; ++b) v = static_cast<std::uint8_t>((v << 1) | (bits[i + b] & 1u));
    out.push_back(Gf32::from_raw(v));
  }
  return out;
}

}  // namespace biolink::fec
