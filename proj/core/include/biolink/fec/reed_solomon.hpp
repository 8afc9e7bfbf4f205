#pragma once

#include <array>
#include <span>

#include "biolink/fec/gf32.hpp"

namespace biolink::fec {

// RS(31,26) over GF(32). Symbols are ordered highest degree first:
// codeword[0..25] carries the message (x^30..x^5), codeword[26..30] the
// parity (x^4..x^0). The generator has consecutive roots alpha^1..alpha^5.
inline constexpr int kRsN = 31;
inline constexpr int kRsK = 26;
inline constexpr int kRsParity = kRsN - kRsK;
inline constexpr int kRsFirstRoot = 1;
inline constexpr int kRsCorrectable = kRsParity / 2;
inline constexpr int kRsBitsPerSymbol = 5;
inline constexpr double kRsRate = static_cast<double>(kRsK) / kRsN;

using RsMessage = std::array<Gf32, kRsK>;
using RsCodeword = std::array<Gf32, kRsN>;

/// Generator coefficients, highest degree first (monic, so [0] == 1).
const std::array<Gf32, kRsParity + 1>& rs_generator();

/// Systematic encoding by polynomial division of x^5 m(x) by g(x).
/// Throws ArgumentError unless msg has 26 symbols.
RsCodeword rs_encode(std::span<const Gf32> msg);

/// Same code, computed with the symbol-serial feedback shift register.
RsCodeword rs_encode_lfsr(std::span<const Gf32> msg);

/// c(alpha^power), Horner's rule over a highest-degree-first word.
Gf32 evaluate(std::span<const Gf32> word, int power);

struct RsDecodeResult {
  RsMessage message{};
  int corrected = 0;
  /// Set when the error pattern is beyond the decoder: locator degree above
  /// two, root count mismatch, or nonzero syndromes after correction. The
  /// message then holds the received systematic symbols unchanged.
  bool failure = false;
};

/// Berlekamp-Massey on S1..S4, Chien search, Forney values; S5 checks the
/// result. Throws ArgumentError unless word has 31 symbols.
RsDecodeResult rs_decode(std::span<const Gf32> word);

}  // namespace biolink::fec
