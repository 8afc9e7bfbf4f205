#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "biolink/mac/aloha.hpp"
#include "biolink/mac/cdma.hpp"

namespace biolink::mac {

struct SweepOptions {
  int packet_bytes = 64;
  int frame_slots = kDefaultFrameSlots;
  int trials = 100;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
};

struct Scenario1Row {
  double rate_bps;
  double read_time_s;
  int packet_bytes;
  int max_motes;  // 0 when even a single mote cannot be read
};

/// Largest n on the grid 1, 1 + step, 1 + 2 step, ... for which every trial
/// reads all n motes.
std::vector<Scenario1Row> scenario1_sweep(std::span<const double> rates,
                                          std::span<const double> read_times,
                                          const SweepOptions& opt, int n_step = 10,
                                          int n_limit = 100'000);

struct Scenario2Row {
  int n_motes;
  double rate_bps;
  double read_time_s;
  double mean_successes;
};

std::vector<Scenario2Row> scenario2_sweep(std::span<const int> n_motes,
                                          std::span<const double> rates,
                                          std::span<const double> read_times,
                                          const SweepOptions& opt);

/// n with the highest mean successes among rows matching (rate, read_time);
/// ties go to the smaller n. Returns 0 if no row matches.
int optimum_deployment(std::span<const Scenario2Row> rows, double rate_bps, double read_time_s);

struct CdmaRow {
  int n_motes;
  int code_length;
  CodeFamily family;
  double mean_successes;
  double std_error;
};

std::vector<CdmaRow> cdma_sweep(std::span<const int> n_motes, std::span<const int> code_lengths,
                                CodeFamily family, int packet_bytes, int trials,
                                std::uint64_t seed, unsigned workers = 1);

enum class Scheme { Aloha, Cdma };
std::string_view to_string(Scheme s);

struct CompareRow {
  int n_motes;
  std::int64_t duration_slots;
  Scheme scheme;
  double mean_successes;
  double read_time_s;
};

struct CompareOptions {
  double rate_bps = 20'000.0;
  int packet_bytes = 64;
  int frame_slots = 128;
  int code_length = 128;
  CodeFamily family = CodeFamily::Walsh;
  int trials = 100;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
};

/// ALOHA (frame_slots per frame) over `duration_slots`, against CDMA with
/// one spread packet per mote. CDMA seeds depend only on (seed, n), so its
/// rows do not change with the duration.
std::vector<CompareRow> compare_schemes(std::span<const int> n_motes,
                                        std::int64_t duration_slots, const CompareOptions& opt);

}  // namespace biolink::mac
