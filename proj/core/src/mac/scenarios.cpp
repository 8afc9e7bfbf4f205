#include "biolink/mac/scenarios.hpp"

#include <string>

#include "biolink/common/errors.hpp"

namespace biolink::mac {

namespace {

MacScenario base_scenario(double rate, double read_time, const SweepOptions& opt) {
  MacScenario sc;
  sc.rate_bps = rate;
  sc.read_time_s = read_time;
  sc.packet_bytes = opt.packet_bytes;
  sc.frame_slots = opt.frame_slots;
  sc.trials = opt.trials;
  return sc;
}

void require_nonempty(bool empty, const char* what) {
  if (empty) throw ArgumentError(std::string(what) + ": list must be non-empty");
}

}  // namespace

std::vector<Scenario1Row> scenario1_sweep(std::span<const double> rates,
                                          std::span<const double> read_times,
                                          const SweepOptions& opt, int n_step, int n_limit) {
  require_nonempty(rates.empty() || read_times.empty(), "scenario1_sweep");
  if (n_step < 1) throw ArgumentError("scenario1_sweep: n_step must be at least 1");
  std::vector<Scenario1Row> rows;
  for (std::size_t ri = 0; ri < rates.size(); ++ri) {
    for (std::size_t ti = 0; ti < read_times.size(); ++ti) {
      MacScenario sc = base_scenario(rates[ri], read_times[ti], opt);
      sc.validate();
      const std::uint64_t cell_seed = derive_seed(opt.seed, ri, ti);
      const std::int64_t slots = sc.slots_available();
      int best = 0;
      for (int n = 1; n <= n_limit && n <= slots; n += n_step) {
        sc.n_motes = n;
        sc.seed = derive_seed(cell_seed, static_cast<std::uint64_t>(n));
        if (aloha_mean(sc, opt.workers).min < n) break;
        best = n;
      }
      rows.push_back({rates[ri], read_times[ti], opt.packet_bytes, best});
    }
  }
  return rows;
}

std::vector<Scenario2Row> scenario2_sweep(std::span<const int> n_motes,
                                          std::span<const double> rates,
                                          std::span<const double> read_times,
                                          const SweepOptions& opt) {
  require_nonempty(n_motes.empty() || rates.empty() || read_times.empty(), "scenario2_sweep");
  std::vector<Scenario2Row> rows;
  for (std::size_t ri = 0; ri < rates.size(); ++ri) {
    for (std::size_t ti = 0; ti < read_times.size(); ++ti) {
      const std::uint64_t cell_seed = derive_seed(opt.seed, ri, ti);
      for (int n : n_motes) {
        MacScenario sc = base_scenario(rates[ri], read_times[ti], opt);
        sc.n_motes = n;
        sc.seed = derive_seed(cell_seed, static_cast<std::uint64_t>(n));
        rows.push_back({n, rates[ri], read_times[ti], aloha_mean(sc, opt.workers).mean});
      }
    }
  }
  return rows;
}

int optimum_deployment(std::span<const Scenario2Row> rows, double rate_bps, double read_time_s) {
  int best_n = 0;
  double best = -1.0;
  for (const auto& r : rows) {
    if (r.rate_bps != rate_bps || r.read_time_s != read_time_s) continue;
    if (r.mean_successes > best || (r.mean_successes == best && r.n_motes < best_n)) {
      best = r.mean_successes;
      best_n = r.n_motes;
    }
  }
  return best_n;
}

std::vector<CdmaRow> cdma_sweep(std::span<const int> n_motes, std::span<const int> code_lengths,
                                CodeFamily family, int packet_bytes, int trials,
                                std::uint64_t seed, unsigned workers) {
  require_nonempty(n_motes.empty() || code_lengths.empty(), "cdma_sweep");
  std::vector<CdmaRow> rows;
  for (int c : code_lengths) {
    for (int n : n_motes) {
      CdmaScenario sc;
      sc.n_motes = n;
      sc.family = family;
      sc.code_length = c;
      sc.packet_bytes = packet_bytes;
      sc.trials = trials;
      sc.seed = derive_seed(seed, static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(n));
      const auto m = cdma_simulate(sc, workers);
      rows.push_back({n, c, family, m.mean, m.std_error});
    }
  }
  return rows;
}

std::string_view to_string(Scheme s) { return s == Scheme::Aloha ? "aloha" : "cdma"; }

std::vector<CompareRow> compare_schemes(std::span<const int> n_motes,
                                        std::int64_t duration_slots, const CompareOptions& opt) {
  require_nonempty(n_motes.empty(), "compare_schemes");
  if (duration_slots < 1) throw ArgumentError("compare_schemes: duration_slots must be at least 1");
  std::vector<CompareRow> rows;
  const std::uint64_t aloha_seed = derive_seed(opt.seed, 1, static_cast<std::uint64_t>(duration_slots));
  const std::uint64_t cdma_seed = derive_seed(opt.seed, 2);
  for (int n : n_motes) {
    MacScenario sc;
    sc.n_motes = n;
    sc.rate_bps = opt.rate_bps;
    sc.packet_bytes = opt.packet_bytes;
    sc.frame_slots = opt.frame_slots;
    sc.trials = opt.trials;
    sc.read_time_s = sc.read_time_for_slots(duration_slots);
    sc.seed = derive_seed(aloha_seed, static_cast<std::uint64_t>(n));
    rows.push_back({n, duration_slots, Scheme::Aloha, aloha_mean(sc, opt.workers).mean, sc.read_time_s});

    CdmaScenario cs;
    cs.n_motes = n;
    cs.family = opt.family;
    cs.code_length = opt.code_length;
    cs.packet_bytes = opt.packet_bytes;
    cs.trials = opt.trials;
    cs.seed = derive_seed(cdma_seed, static_cast<std::uint64_t>(n));
    rows.push_back({n, duration_slots, Scheme::Cdma, cdma_simulate(cs, opt.workers).mean, sc.read_time_s});
  }
  return rows;
}

}  // namespace biolink::mac
