#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace biolink::fec {

// Cyclic Hamming(15,11) with generator x^4 + x + 1. Bit vectors are ordered
// highest polynomial degree first: codeword[0..10] is the message,
// codeword[11..14] the parity remainder.
inline constexpr int kHammingN = 15;
inline constexpr int kHammingK = 11;
inline constexpr unsigned kHammingGenerator = 0x13;
inline constexpr double kHammingRate = static_cast<double>(kHammingK) / kHammingN;

using HammingMessage = std::array<std::uint8_t, kHammingK>;
using HammingCodeword = std::array<std::uint8_t, kHammingN>;

/// Parity-check form: parity = sum of alpha^deg over set message bits in
/// GF(16). Throws ArgumentError unless msg has 11 entries.
HammingCodeword hamming_encode(std::span<const std::uint8_t> msg);

/// Bit-serial shift-register division by the generator.
HammingCodeword hamming_encode_lfsr(std::span<const std::uint8_t> msg);

struct HammingDecodeResult {
  HammingMessage message{};
  int corrected = 0;
  /// Never raised by this code: (15,11) is perfect, so every nonzero
  /// syndrome names exactly one position. Kept for callers that treat
  /// decoders uniformly.
  bool detected_uncorrectable = false;
};

/// Syndrome decoding; corrects any single bit error. Throws ArgumentError
/// unless word has 15 entries.
HammingDecodeResult hamming_decode(std::span<const std::uint8_t> word);

}  // namespace biolink::fec
