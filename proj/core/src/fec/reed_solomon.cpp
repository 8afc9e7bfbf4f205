#include "biolink/fec/reed_solomon.hpp"

#include <algorithm>
#include <string>

#include "biolink/common/errors.hpp"

namespace biolink::fec {

namespace {

constexpr int kTwoT = 2 * kRsCorrectable;

void check_length(std::size_t got, int want, const char* who) {
  if (got != static_cast<std::size_t>(want))
    throw ArgumentError(std::string(who) + ": expected " + std::to_string(want) +
                        " symbols, got " + std::to_string(got));
}

std::array<Gf32, kRsParity + 1> make_generator() {
  // Lowest degree first while multiplying out (x + alpha^i).
  std::array<Gf32, kRsParity + 1> low{};
  low[0] = Gf32::from_raw(1);
  for (int i = 0; i < kRsParity; ++i) {
    const Gf32 root = Gf32::alpha_pow(kRsFirstRoot + i);
    for (int j = i + 1; j > 0; --j) low[j] = low[j - 1] + low[j] * root;
    low[0] = low[0] * root;
  }
  std::array<Gf32, kRsParity + 1> high{};
  for (int j = 0; j <= kRsParity; ++j) high[j] = low[kRsParity - j];
  return high;
}

RsCodeword assemble(std::span<const Gf32> msg, std::span<const Gf32> parity) {
  RsCodeword c{};
  for (int i = 0; i < kRsK; ++i) c[i] = msg[i];
  for (int j = 0; j < kRsParity; ++j) c[kRsK + j] = parity[j];
  return c;
}

// Polynomial helpers below store coefficients lowest degree first.
Gf32 eval_low(std::span<const Gf32> poly, Gf32 x) {
  Gf32 acc{};
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

}  // namespace

const std::array<Gf32, kRsParity + 1>& rs_generator() {
  static const auto g = make_generator();
  return g;
}

RsCodeword rs_encode(std::span<const Gf32> msg) {
  check_length(msg.size(), kRsK, "rs_encode");
  const auto& g = rs_generator();
  // Long division of x^5 m(x) by the monic g(x).
  std::array<Gf32, kRsN> work{};
  for (int i = 0; i < kRsK; ++i) work[i] = msg[i];
  for (int i = 0; i < kRsK; ++i) {
    const Gf32 coef = work[i];
    if (coef.is_zero()) continue;
    for (int j = 1; j <= kRsParity; ++j) work[i + j] += coef * g[j];
  }
  return assemble(msg, std::span(work).subspan(kRsK));
}

RsCodeword rs_encode_lfsr(std::span<const Gf32> msg) {
  check_length(msg.size(), kRsK, "rs_encode_lfsr");
  const auto& g = rs_generator();
  std::array<Gf32, kRsParity> reg{};  // reg[0] is the output stage
  for (int i = 0; i < kRsK; ++i) {
    const Gf32 feedback = msg[i] + reg[0];
    for (int j = 0; j + 1 < kRsParity; ++j) reg[j] = reg[j + 1] + feedback * g[j + 1];
    reg[kRsParity - 1] = feedback * g[kRsParity];
  }
  return assemble(msg, reg);
}

Gf32 evaluate(std::span<const Gf32> word, int power) {
  const Gf32 x = Gf32::alpha_pow(power);
  Gf32 acc{};
  for (Gf32 s : word) acc = acc * x + s;
  return acc;
}

RsDecodeResult rs_decode(std::span<const Gf32> word) {
  check_length(word.size(), kRsN, "rs_decode");
  RsDecodeResult result;
  RsCodeword c{};
  for (int i = 0; i < kRsN; ++i) c[i] = word[i];
  auto emit = [&] {
    for (int i = 0; i < kRsK; ++i) result.message[i] = c[i];
    return result;
  };

  std::array<Gf32, kRsParity> syn{};
  bool clean = true;
  for (int j = 0; j < kRsParity; ++j) {
    syn[j] = evaluate(c, kRsFirstRoot + j);
    clean = clean && syn[j].is_zero();
  }
  if (clean) return emit();

  // Berlekamp-Massey over S1..S2t.
  std::array<Gf32, kTwoT + 1> lambda{}, prev{}, tmp{};
  lambda[0] = prev[0] = Gf32::from_raw(1);
  int degree = 0, shift = 1;
  Gf32 prev_disc = Gf32::from_raw(1);
  for (int n = 0; n < kTwoT; ++n) {
    Gf32 disc = syn[n];
    for (int i = 1; i <= degree; ++i) disc += lambda[i] * syn[n - i];
    if (disc.is_zero()) {
      ++shift;
      continue;
    }
    const Gf32 scale = disc / prev_disc;
    tmp = lambda;
    for (int i = 0; i + shift <= kTwoT; ++i) lambda[i + shift] += scale * prev[i];
    if (2 * degree <= n) {
      degree = n + 1 - degree;
      prev = tmp;
      prev_disc = disc;
      shift = 1;
    } else {
      ++shift;
    }
  }
  if (degree > kRsCorrectable) {
    result.failure = true;
    return emit();
  }

  // Chien search: an error at degree p has locator X = alpha^p, root X^-1.
  std::array<int, kRsCorrectable> positions{};
  int found = 0;
  const std::span<const Gf32> lam(lambda.data(), degree + 1);
  for (int p = 0; p < kRsN && found <= degree; ++p) {
    if (eval_low(lam, Gf32::alpha_pow(-p)).is_zero()) {
      if (found == degree) {
        found = degree + 1;
        break;
      }
      positions[found++] = p;
    }
  }
  if (found != degree) {
    result.failure = true;
    return emit();
  }

  // Forney: omega = S(x) lambda(x) mod x^2t; e = omega(X^-1) / lambda'(X^-1).
  std::array<Gf32, kTwoT> omega{};
  for (int i = 0; i < kTwoT; ++i)
    for (int j = 0; j <= std::min(i, degree); ++j) omega[i] += syn[i - j] * lambda[j];
  std::array<Gf32, kTwoT> dlambda{};
  for (int i = 1; i <= degree; i += 2) dlambda[i - 1] = lambda[i];  // odd terms survive

  RsCodeword corrected = c;
  for (int k = 0; k < degree; ++k) {
    const Gf32 x_inv = Gf32::alpha_pow(-positions[k]);
    const Gf32 den = eval_low(dlambda, x_inv);
    if (den.is_zero()) {
      result.failure = true;
      return emit();
    }
    const Gf32 magnitude = eval_low(omega, x_inv) / den;
    corrected[kRsN - 1 - positions[k]] += magnitude;
  }
  for (int j = 0; j < kRsParity; ++j) {
    if (!evaluate(corrected, kRsFirstRoot + j).is_zero()) {
      result.failure = true;
      return emit();
    }
  }
  c = corrected;
  result.corrected = degree;
  return emit();
}

}  // namespace biolink::fec
