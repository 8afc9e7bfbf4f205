#include "biolink/mac/cdma.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "biolink/common/errors.hpp"
#include "biolink/common/parallel.hpp"

namespace biolink::mac {

std::string_view to_string(CodeFamily f) {
  return f == CodeFamily::Walsh ? "walsh" : "random";
}

std::vector<SpreadingCode> walsh_codes(int length) {
  if (length < 1 || !std::has_single_bit(static_cast<unsigned>(length)))
    throw ArgumentError("walsh_codes: length must be a power of two");
  std::vector<SpreadingCode> codes(static_cast<std::size_t>(length));
  for (int r = 0; r < length; ++r) {
    auto& c = codes[static_cast<std::size_t>(r)];
    c.family = CodeFamily::Walsh;
    c.chips.resize(static_cast<std::size_t>(length));
    for (int k = 0; k < length; ++k)
      c.chips[static_cast<std::size_t>(k)] =
          std::popcount(static_cast<unsigned>(r & k)) % 2 ? std::int8_t{-1} : std::int8_t{1};
  }
  return codes;
}

namespace {

// Fills v with fair +-1 values, 64 per generator draw.
void fill_signs(std::vector<std::int8_t>& v, Rng& rng) {
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i % 64 == 0) word = rng();
    v[i] = (word >> (i % 64)) & 1 ? std::int8_t{1} : std::int8_t{-1};
  }
}

}  // namespace

SpreadingCode random_code(int length, Rng& rng) {
  if (length < 1) throw ArgumentError("random_code: length must be positive");
  SpreadingCode c;
  c.family = CodeFamily::Random;
  c.chips.resize(static_cast<std::size_t>(length));
  fill_signs(c.chips, rng);
  return c;
}

std::vector<SpreadingCode> assign_codes(int n_motes, CodeFamily family, int length, Rng& rng) {
  if (n_motes < 0) throw ArgumentError("assign_codes: n_motes must be non-negative");
  std::vector<SpreadingCode> out;
  out.reserve(static_cast<std::size_t>(n_motes));
  if (family == CodeFamily::Random) {
    for (int m = 0; m < n_motes; ++m) out.push_back(random_code(length, rng));
    return out;
  }
  const auto rows = walsh_codes(length);
  std::vector<int> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int m = 0; m < n_motes; ++m)
    out.push_back(rows[static_cast<std::size_t>(order[static_cast<std::size_t>(m) % order.size()])]);
  return out;
}

namespace {

void check_inputs(std::span<const SpreadingCode> codes, const MoteBits& bits) {
  if (codes.size() != bits.size()) throw ArgumentError("cdma: one bit stream per code required");
  if (codes.empty()) return;
  const std::size_t len = codes[0].length();
  const std::size_t nb = bits[0].size();
  for (std::size_t j = 0; j < codes.size(); ++j) {
    if (codes[j].length() != len) throw ArgumentError("cdma: codes must share one length");
    if (bits[j].size() != nb) throw ArgumentError("cdma: bit streams must share one length");
  }
}

}  // namespace

int cdma_successes(std::span<const SpreadingCode> codes, const MoteBits& bits) {
  check_inputs(codes, bits);
  const std::size_t n = codes.size();
  if (n == 0) return 0;
  const std::size_t nb = bits[0].size();

  struct Term {
    std::size_t j;
    int r;
  };
  std::vector<std::vector<Term>> cross(n);
  std::vector<int> self(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const int r = std::inner_product(codes[j].chips.begin(), codes[j].chips.end(),
                                       codes[k].chips.begin(), 0);
      if (j == k)
        self[k] = r;
      else if (r != 0)
        cross[k].push_back({j, r});
    }
  }

  int ok = 0;
  for (std::size_t k = 0; k < n; ++k) {
    bool clean = true;
    for (std::size_t i = 0; i < nb && clean; ++i) {
      int y = bits[k][i] * self[k];
      for (const auto& t : cross[k]) y += bits[t.j][i] * t.r;
      const std::int8_t decided = y >= 0 ? 1 : -1;
      clean = decided == bits[k][i];
    }
    ok += clean;
  }
  return ok;
}

int cdma_successes_chip_level(std::span<const SpreadingCode> codes, const MoteBits& bits) {
  check_inputs(codes, bits);
  const std::size_t n = codes.size();
  if (n == 0) return 0;
  const std::size_t nb = bits[0].size();
  const std::size_t len = codes[0].length();

  std::vector<char> clean(n, 1);
  std::vector<int> rx(len);
  for (std::size_t i = 0; i < nb; ++i) {
    std::fill(rx.begin(), rx.end(), 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < len; ++c) rx[c] += bits[j][i] * codes[j].chips[c];
    for (std::size_t k = 0; k < n; ++k) {
      int y = 0;
      for (std::size_t c = 0; c < len; ++c) y += rx[c] * codes[k].chips[c];
      if ((y >= 0 ? 1 : -1) != bits[k][i]) clean[k] = 0;
    }
  }
  return static_cast<int>(std::count(clean.begin(), clean.end(), 1));
}

MeanSuccesses cdma_simulate(const CdmaScenario& sc, unsigned workers) {
  if (sc.n_motes < 1) throw ArgumentError("cdma_simulate: n_motes must be at least 1");
  if (sc.packet_bytes < 1) throw ArgumentError("cdma_simulate: packet_bytes must be at least 1");
  if (sc.trials < 1) throw ArgumentError("cdma_simulate: trials must be at least 1");
  if (sc.code_length < 1) throw ArgumentError("cdma_simulate: code_length must be positive");

  const auto counts = parallel_map(static_cast<std::size_t>(sc.trials), workers, [&](std::size_t t) {
    Rng rng(derive_seed(sc.seed, t));
    const auto codes = assign_codes(sc.n_motes, sc.family, sc.code_length, rng);
    MoteBits bits(static_cast<std::size_t>(sc.n_motes),
                  std::vector<std::int8_t>(static_cast<std::size_t>(sc.packet_bytes) * 8));
    for (auto& b : bits) fill_signs(b, rng);
    return cdma_successes(codes, bits);
  });

  return summarize(counts);
}

}  // namespace biolink::mac
