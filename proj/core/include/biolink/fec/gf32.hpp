#pragma once

#include <array>
#include <cstdint>

namespace biolink::fec {

/// x^5 + x^2 + 1, the field's primitive polynomial.
inline constexpr unsigned kGf32Primitive = 0x25;
inline constexpr int kGf32Order = 31;  // multiplicative group order

namespace detail {

struct Gf32Tables {
  std::array<std::uint8_t, 2 * kGf32Order> exp{};
  std::array<int, 32> log{};
};

constexpr Gf32Tables make_gf32_tables() {
  Gf32Tables t;
  unsigned x = 1;
  for (int i = 0; i < kGf32Order; ++i) {
    t.exp[i] = static_cast<std::uint8_t>(x);
    t.exp[i + kGf32Order] = static_cast<std::uint8_t>(x);
    t.log[x] = i;
    x <<= 1;
    if (x & 0x20) x ^= kGf32Primitive;
  }
  t.log[0] = -1;
  return t;
}

inline constexpr Gf32Tables kGf32 = make_gf32_tables();

}  // namespace detail

/// Element of GF(2^5).
class Gf32 {
 public:
  constexpr Gf32() = default;
  /// Throws ArgumentError for values above 31.
  explicit Gf32(unsigned value);

  static constexpr Gf32 from_raw(std::uint8_t v) { return Gf32(v, Raw{}); }
  /// alpha^e for any integer e.
  static constexpr Gf32 alpha_pow(int e) {
    e %= kGf32Order;
    if (e < 0) e += kGf32Order;
    return from_raw(detail::kGf32.exp[e]);
  }

  constexpr std::uint8_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }
  /// Discrete log base alpha; -1 for zero.
  constexpr int log() const { return detail::kGf32.log[value_]; }

  /// Throws DomainError for zero.
  Gf32 inverse() const;

  friend constexpr Gf32 operator+(Gf32 a, Gf32 b) { return from_raw(a.value_ ^ b.value_); }
  friend constexpr Gf32 operator-(Gf32 a, Gf32 b) { return a + b; }
  friend constexpr Gf32 operator*(Gf32 a, Gf32 b) {
    if (a.value_ == 0 || b.value_ == 0) return {};
    return from_raw(detail::kGf32.exp[a.log() + b.log()]);
  }
  friend Gf32 operator/(Gf32 a, Gf32 b);
  constexpr Gf32& operator+=(Gf32 o) { return *this = *this + o; }
  constexpr Gf32& operator*=(Gf32 o) { return *this = *this * o; }
  friend constexpr bool operator==(Gf32, Gf32) = default;

 private:
  struct Raw {};
  constexpr Gf32(std::uint8_t v, Raw) : value_(v) {}
  std::uint8_t value_ = 0;
};

}  // namespace biolink::fec
