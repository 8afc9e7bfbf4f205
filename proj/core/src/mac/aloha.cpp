#include "biolink/mac/aloha.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "biolink/common/errors.hpp"
#include "biolink/common/parallel.hpp"

namespace biolink::mac {

std::int64_t MacScenario::slots_available() const {
  // The small guard keeps exact multiples like 128 x 25.6 ms from flooring to 127.
  const double slots = read_time_s * rate_bps / packet_bits();
  return static_cast<std::int64_t>(std::floor(slots + 1e-9));
}

double MacScenario::read_time_for_slots(std::int64_t slots) const {
  return static_cast<double>(slots) * packet_bits() / rate_bps;
}

void MacScenario::validate() const {
  if (n_motes < 0) throw ArgumentError("n_motes must be non-negative");
  if (!(rate_bps > 0.0) || !std::isfinite(rate_bps)) throw ArgumentError("rate_bps must be positive");
  if (packet_bytes < 1) throw ArgumentError("packet_bytes must be at least 1");
  if (!(read_time_s >= 0.0) || !std::isfinite(read_time_s))
    throw ArgumentError("read_time_s must be non-negative");
  if (frame_slots < 1) throw ArgumentError("frame_slots must be at least 1");
  if (trials < 1) throw ArgumentError("trials must be at least 1");
}

AlohaOutcome aloha_simulate(const MacScenario& sc, Rng& rng) {
  sc.validate();
  AlohaOutcome out;
  std::int64_t remaining_slots = sc.slots_available();
  int unread = sc.n_motes;
  std::vector<int> hits;
  while (unread > 0 && remaining_slots > 0) {
    const int frame = static_cast<int>(std::min<std::int64_t>(sc.frame_slots, remaining_slots));
    hits.assign(static_cast<std::size_t>(frame), 0);
    std::uniform_int_distribution<int> pick(0, frame - 1);
    for (int m = 0; m < unread; ++m) ++hits[static_cast<std::size_t>(pick(rng))];
    const int singles = static_cast<int>(std::count(hits.begin(), hits.end(), 1));
    out.successes += singles;
    unread -= singles;
    out.slots_used += frame;
    remaining_slots -= frame;
  }
  return out;
}

MeanSuccesses aloha_mean(const MacScenario& sc, unsigned workers) {
  sc.validate();
  const auto counts = parallel_map(static_cast<std::size_t>(sc.trials), workers, [&](std::size_t t) {
    Rng rng(derive_seed(sc.seed, t));
    return aloha_simulate(sc, rng).successes;
  });
  return summarize(counts);
}

MeanSuccesses summarize(std::span<const int> counts) {
  if (counts.empty()) return {};
  MeanSuccesses r;
  r.trials = static_cast<int>(counts.size());
  r.min = std::numeric_limits<int>::max();
  double sum = 0.0, sq = 0.0;
  for (int c : counts) {
    sum += c;
    sq += static_cast<double>(c) * c;
    r.min = std::min(r.min, c);
  }
  const double n = static_cast<double>(counts.size());
  r.mean = sum / n;
  const double var = n > 1 ? std::max(0.0, (sq - n * r.mean * r.mean) / (n - 1)) : 0.0;
  r.std_error = std::sqrt(var / n);
  return r;
}

double aloha_single_frame_expectation(int n, int s) {
  if (n < 0 || s < 1) throw ArgumentError("aloha_single_frame_expectation: need n >= 0, s >= 1");
  if (n == 0) return 0.0;
  return n * std::pow(1.0 - 1.0 / s, n - 1);
}

}  // namespace biolink::mac
