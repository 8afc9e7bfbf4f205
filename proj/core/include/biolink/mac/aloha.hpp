#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "biolink/common/seed.hpp"

namespace biolink::mac {

using Rng = std::mt19937_64;

inline constexpr int kDefaultFrameSlots = 128;

struct MacScenario {
  int n_motes = 0;
  double rate_bps = 20'000.0;
  int packet_bytes = 64;
  double read_time_s = 0.0;
  int frame_slots = kDefaultFrameSlots;
  int trials = 100;
  std::uint64_t seed = kDefaultSeed;

  int packet_bits() const { return packet_bytes * 8; }
  double slot_duration() const { return packet_bits() / rate_bps; }
  /// Whole slots that fit in read_time_s; the fractional remainder is dropped.
  std::int64_t slots_available() const;
  /// Read time spanning exactly `slots` slots.
  double read_time_for_slots(std::int64_t slots) const;

  void validate() const;
};

struct AlohaOutcome {
  int successes = 0;
  std::int64_t slots_used = 0;
};

/// One framed slotted ALOHA session. Each unread mote picks one slot of the
/// current frame uniformly; singleton slots are reads and those motes go
/// quiet. The last frame is shortened to the slots left in the read time.
AlohaOutcome aloha_simulate(const MacScenario& sc, Rng& rng);

struct MeanSuccesses {
  double mean = 0.0;
  double std_error = 0.0;
  int min = 0;  // fewest successes in any trial
  int trials = 0;
};

/// Mean, standard error and minimum of per-trial success counts.
MeanSuccesses summarize(std::span<const int> counts);

/// aloha_simulate over sc.trials trials; trial t uses
/// derive_seed(sc.seed, t).
MeanSuccesses aloha_mean(const MacScenario& sc, unsigned workers = 1);

/// Expected singleton slots when n motes pick among s slots once:
/// n (1 - 1/s)^(n-1).
double aloha_single_frame_expectation(int n, int s);

}  // namespace biolink::mac
