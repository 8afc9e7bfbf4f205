#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace biolink::harness {

/// Bad configuration input. line() is 0 when the problem is not tied to a
/// file line (command-line overrides, cross-key checks).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line = 0, std::string key = {})
      : std::runtime_error(what), line_(line), key_(std::move(key)) {}
  int line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  int line_;
  std::string key_;
};

struct Table1Spec {
  double resonance_freq_hz;
  int subcarrier_divider;
  double rel_permeability;
};

/// Every tunable the subcommands read. Defaults are the physical-layer
/// simulation parameters and the MAC defaults.
struct Params {
  // coils and link
  double reader_radius_m = 0.05;
  int reader_turns = 65;
  double reader_wire_diameter_m = 339.6e-6;
  double reader_height_m = 0.008;
  double mote_radius_m = 50e-6;
  int mote_turns = 345;
  double mote_wire_diameter_m = 69.6e-6;
  double mote_height_m = 250e-6;
  double separation_m = 0.06;
  double drive_voltage_v = 3.8;
  double resonance_freq_hz = 13.56e6;
  int subcarrier_divider = 6;
  double rel_permeability = 1.0;
  double load_resistance_ohm = 0.0;  // 0 selects a matched load

  // receiver noise; at most one of the two may be given
  std::optional<double> noise_total_dbm;
  std::optional<double> noise_figure_db;
  double temperature_k = 290.0;
  double noise_bandwidth_hz = 200e3;

  // distance grid for link-sweep and ber-sweep
  double distance_start_m = 0.01;
  double distance_stop_m = 0.10;
  double distance_step_m = 0.005;

  std::vector<Table1Spec> table1_rows = {
      {1e6, 4, 1.0},      {1e6, 4, 10.0},     {1e6, 4, 50.0},
      {13.56e6, 6, 1.0},  {13.56e6, 6, 10.0}, {100e6, 7, 1.0},
  };

  // physical-layer Monte Carlo
  std::vector<std::string> modulations = {"ask", "bpsk"};
  std::vector<std::string> codes = {"none", "hamming15_11", "rs31_26"};
  std::uint64_t min_bits = 100'000;
  std::uint64_t min_errors = 100;
  std::uint64_t max_bits = 10'000'000;

  // MAC
  std::vector<double> rates_bps = {200e3};
  std::vector<double> read_times_s = {10.0};
  int packet_bytes = 64;
  int frame_slots = 128;
  int trials = 100;
  std::vector<int> n_motes = {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  int n_step = 10;
  int n_limit = 100'000;
  std::vector<int> code_lengths = {16, 32, 64, 128, 256};
  std::string code_family = "random";
  std::vector<int> duration_slots = {128, 1280};

  unsigned workers = 1;

  std::vector<double> distances() const;
  /// Checks constraints spanning several keys.
  void validate() const;
};

/// Reads `key = value` lines; `#` starts a comment. An empty file yields the
/// defaults. Throws ConfigError naming the file and line.
Params load_config(const std::filesystem::path& path);

/// Same as load_config on in-memory text; `origin` prefixes messages.
Params parse_config(std::string_view text, std::string_view origin = "<config>");

/// Applies one `key=value` override on top of `params`.
void apply_override(Params& params, std::string_view assignment);

struct KeyInfo {
  std::string_view name;
  std::string_view help;
};

/// Recognized keys in documentation order.
std::vector<KeyInfo> known_keys();

}  // namespace biolink::harness
