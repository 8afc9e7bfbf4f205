#include "biolink/fec/hamming.hpp"

#include <string>

#include "biolink/common/errors.hpp"

namespace biolink::fec {

namespace {

// alpha^i in GF(16) mod x^4 + x + 1; alpha^i == x^i mod g(x).
constexpr std::array<std::uint8_t, 15> make_pow16() {
  std::array<std::uint8_t, 15> t{};
  unsigned x = 1;
  for (int i = 0; i < 15; ++i) {
    t[i] = static_cast<std::uint8_t>(x);
    x <<= 1;
    if (x & 0x10) x ^= kHammingGenerator;
  }
  return t;
}

constexpr auto kPow16 = make_pow16();

constexpr std::array<int, 16> make_log16() {
  std::array<int, 16> t{};
  t[0] = -1;
  for (int i = 0; i < 15; ++i) t[kPow16[i]] = i;
  return t;
}

constexpr auto kLog16 = make_log16();

// Polynomial degree carried by codeword index i.
constexpr int degree_of(int i) { return kHammingN - 1 - i; }

void check_length(std::span<const std::uint8_t> bits, std::size_t want, const char* who) {
  if (bits.size() != want)
    throw ArgumentError(std::string(who) + ": expected " + std::to_string(want) +
                        " bits, got " + std::to_string(bits.size()));
}

HammingCodeword with_parity(std::span<const std::uint8_t> msg, unsigned parity) {
  HammingCodeword c{};
  for (int i = 0; i < kHammingK; ++i) c[i] = msg[i] & 1u;
  for (int j = 0; j < 4; ++j) c[kHammingK + j] = (parity >> (3 - j)) & 1u;
  return c;
}

}  // namespace

HammingCodeword hamming_encode(std::span<const std::uint8_t> msg) {
  check_length(msg, kHammingK, "hamming_encode");
  unsigned parity = 0;
  for (int i = 0; i < kHammingK; ++i)
    if (msg[i] & 1u) parity ^= kPow16[degree_of(i)];
  return with_parity(msg, parity);
}

HammingCodeword hamming_encode_lfsr(std::span<const std::uint8_t> msg) {
  check_length(msg, kHammingK, "hamming_encode_lfsr");
  unsigned reg = 0;  // 4-stage remainder register
  for (int i = 0; i < kHammingK; ++i) {
    const unsigned feedback = ((reg >> 3) ^ msg[i]) & 1u;
    reg = (reg << 1) & 0xF;
    if (feedback) reg ^= kHammingGenerator & 0xF;
  }
  return with_parity(msg, reg);
}

HammingDecodeResult hamming_decode(std::span<const std::uint8_t> word) {
  check_length(word, kHammingN, "hamming_decode");
  HammingCodeword c{};
  unsigned syndrome = 0;
  for (int i = 0; i < kHammingN; ++i) {
    c[i] = word[i] & 1u;
    if (c[i]) syndrome ^= kPow16[degree_of(i)];
  }
  HammingDecodeResult r;
  if (syndrome != 0) {
    c[degree_of(kLog16[syndrome])] ^= 1u;
    r.corrected = 1;
  }
  for (int i = 0; i < kHammingK; ++i) r.message[i] = c[i];
  return r;
}

}  // namespace biolink::fec
