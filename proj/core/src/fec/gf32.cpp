#include "biolink/fec/gf32.hpp"

#include <string>

#include "biolink/common/errors.hpp"

namespace biolink::fec {

Gf32::Gf32(unsigned value) : value_(static_cast<std::uint8_t>(value)) {
  if (value > 31) throw ArgumentError("Gf32: value " + std::to_string(value) + " out of range");
}

Gf32 Gf32::inverse() const {
  if (is_zero()) throw DomainError("Gf32: zero has no inverse");
  return alpha_pow(-log());
}

Gf32 operator/(Gf32 a, Gf32 b) { return a * b.inverse(); }

}  // namespace biolink::fec
