#include "biolink/harness/run.hpp"

#include <fmt/format.h>

#include <array>
#include <charconv>
#include <iterator>

#include "biolink/common/seed.hpp"
#include "biolink/link/coil.hpp"
#include "biolink/mac/scenarios.hpp"
#include "biolink/phy/ber.hpp"

namespace biolink::harness {

namespace {

struct CommandInfo {
  Command command;
  std::string_view name;
  std::string_view header;
  std::string_view about;
};

constexpr std::array<CommandInfo, 7> kCommands{{
    {Command::LinkSweep, "link-sweep", "distance_m,p_re_dbm,snr_db",
     "received backscatter power and SNR over the distance grid"},
    {Command::Table1, "table1",
     "resonance_freq_hz,subcarrier_divider,mu,p_tx_db,p_re_dbm,path_loss_db,sideband_db,"
     "total_loss_db,reader_res_ohm,mote_res_ohm,quality_factor",
     "link budget for each table1_rows entry at separation_m"},
    {Command::BerSweep, "ber-sweep", "distance_m,scheme,code,ber,bits",
     "Monte Carlo BER over the distance grid for every modulation x code"},
    {Command::MacScenario1, "mac-scenario1", "rate_bps,read_time_s,packet_bytes,max_motes",
     "largest mote count fully read in every trial, per rate and read time"},
    {Command::MacScenario2, "mac-scenario2", "n_motes,rate_bps,read_time_s,mean_successes",
     "mean ALOHA reads per mote count, rate and read time"},
    {Command::MacCdma, "mac-cdma", "n_motes,code_len,family,mean_successes",
     "mean whole-packet CDMA successes per code length and mote count"},
    {Command::MacCompare, "mac-compare", "n_motes,duration_slots,scheme,mean_successes",
     "ALOHA against CDMA for each duration_slots entry"},
}};

constexpr std::array<Command, 7> kCommandList{Command::LinkSweep,    Command::Table1,
                                              Command::BerSweep,     Command::MacScenario1,
                                              Command::MacScenario2, Command::MacCdma,
                                              Command::MacCompare};

const CommandInfo& info(Command c) {
  for (const auto& i : kCommands)
    if (i.command == c) return i;
  throw ConfigError("unknown command");
}

phy::ModScheme modulation_from(std::string_view s) {
  return s == "ask" ? phy::ModScheme::Ask : phy::ModScheme::Bpsk;
}

phy::CodeScheme code_from(std::string_view s) {
  if (s == "hamming15_11") return phy::CodeScheme::Hamming15_11;
  if (s == "rs31_26") return phy::CodeScheme::Rs31_26;
  return phy::CodeScheme::None;
}

mac::CodeFamily family_from(std::string_view s) {
  return s == "walsh" ? mac::CodeFamily::Walsh : mac::CodeFamily::Random;
}

mac::SweepOptions sweep_options(const Params& p, std::uint64_t seed) {
  mac::SweepOptions o;
  o.packet_bytes = p.packet_bytes;
  o.frame_slots = p.frame_slots;
  o.trials = p.trials;
  o.seed = seed;
  o.workers = p.workers;
  return o;
}

using Out = fmt::memory_buffer;

void link_sweep(Out& out, const Params& p) {
  for (const auto& pt : link::backscatter_sweep(make_link_config(p), make_noise_model(p), p.distances()))
    fmt::format_to(std::back_inserter(out), "{:.6g},{:.4f},{:.4f}\n", pt.distance, pt.p_re_dbm, pt.snr_db);
}

void table1(Out& out, const Params& p) {
  const auto noise = make_noise_model(p);
  for (const auto& row : p.table1_rows) {
    Params q = p;
    q.resonance_freq_hz = row.resonance_freq_hz;
    q.subcarrier_divider = row.subcarrier_divider;
    q.rel_permeability = row.rel_permeability;
    const auto b = link::link_budget(make_link_config(q), noise);
    fmt::format_to(std::back_inserter(out), "{:g},{},{:g},{:.2f},{:.2f},{:.2f},{:.2f},{:.2f},{:.4f},{:.4f},{:.2f}\n",
                   row.resonance_freq_hz, row.subcarrier_divider, row.rel_permeability,
                   b.transmitted_power_db, b.received_backscatter_power_dbm, b.one_way_path_loss_db,
                   b.sideband_attenuation_db, b.total_loss_db(), b.reader_resistance,
                   b.mote_resistance, b.quality_factor);
  }
}

void ber_sweep(Out& out, const Params& p, std::uint64_t seed) {
  const auto link = make_link_config(p);
  const auto noise = make_noise_model(p);
  const auto distances = p.distances();
  for (const auto& m : p.modulations) {
    for (const auto& c : p.codes) {
      phy::PhyConfig cfg;
      cfg.modulation = modulation_from(m);
      cfg.code = code_from(c);
      cfg.min_bits = p.min_bits;
      cfg.min_errors = p.min_errors;
      cfg.max_bits = p.max_bits;
      cfg.seed = seed;
      cfg.workers = p.workers;
      for (const auto& pt : phy::ber_vs_distance(link, noise, cfg, distances))
        fmt::format_to(std::back_inserter(out), "{:.6g},{},{},{:.6e},{}\n", pt.distance, m, c,
                       pt.result.ber, pt.result.bits);
    }
  }
}

void scenario1(Out& out, const Params& p, std::uint64_t seed) {
  for (const auto& r : mac::scenario1_sweep(p.rates_bps, p.read_times_s, sweep_options(p, seed),
                                            p.n_step, p.n_limit))
    fmt::format_to(std::back_inserter(out), "{:g},{:g},{},{}\n", r.rate_bps, r.read_time_s,
                   r.packet_bytes, r.max_motes);
}

void scenario2(Out& out, const Params& p, std::uint64_t seed) {
  for (const auto& r : mac::scenario2_sweep(p.n_motes, p.rates_bps, p.read_times_s, sweep_options(p, seed)))
    fmt::format_to(std::back_inserter(out), "{},{:g},{:g},{:.4f}\n", r.n_motes, r.rate_bps,
                   r.read_time_s, r.mean_successes);
}

void require_motes(const Params& p) {
  for (int n : p.n_motes)
    if (n < 1) throw ConfigError("n_motes must be >= 1 for CDMA", 0, "n_motes");
}

void cdma(Out& out, const Params& p, std::uint64_t seed) {
  require_motes(p);
  for (const auto& r : mac::cdma_sweep(p.n_motes, p.code_lengths, family_from(p.code_family),
                                       p.packet_bytes, p.trials, seed, p.workers))
    fmt::format_to(std::back_inserter(out), "{},{},{},{:.4f}\n", r.n_motes, r.code_length,
                   mac::to_string(r.family), r.mean_successes);
}

void compare(Out& out, const Params& p, std::uint64_t seed) {
  require_motes(p);
  if (p.rates_bps.size() != 1)
    throw ConfigError("mac-compare needs exactly one rates_bps value", 0, "rates_bps");
  if (p.code_lengths.size() != 1)
    throw ConfigError("mac-compare needs exactly one code_lengths value", 0, "code_lengths");
  mac::CompareOptions o;
  o.rate_bps = p.rates_bps.front();
  o.packet_bytes = p.packet_bytes;
  o.frame_slots = p.frame_slots;
  o.code_length = p.code_lengths.front();
  o.family = family_from(p.code_family);
  o.trials = p.trials;
  o.seed = seed;
  o.workers = p.workers;
  for (int d : p.duration_slots)
    for (const auto& r : mac::compare_schemes(p.n_motes, d, o))
      fmt::format_to(std::back_inserter(out), "{},{},{},{:.4f}\n", r.n_motes, r.duration_slots,
                     mac::to_string(r.scheme), r.mean_successes);
}

}  // namespace

std::span<const Command> all_commands() { return kCommandList; }

std::string_view command_name(Command c) { return info(c).name; }

Command parse_command(std::string_view name) {
  for (const auto& i : kCommands)
    if (i.name == name) return i.command;
  throw ConfigError(fmt::format("unknown subcommand '{}'", name));
}

std::string_view csv_header(Command c) { return info(c).header; }

std::string schema_help() {
  std::string s = "CSV output (one header row, then data):\n";
  for (const auto& i : kCommands)
    s += fmt::format("  {:<14} {}\n  {:<14}   columns: {}\n", i.name, i.about, "", i.header);
  return s;
}

std::uint64_t parse_seed(std::string_view text) {
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
    base = 16;
  }
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v, base);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw ConfigError(fmt::format("invalid seed '{}'", text), 0, "seed");
  return v;
}

std::uint64_t resolve_seed(std::optional<std::string_view> cli, const char* env) {
  if (cli) return parse_seed(*cli);
  if (env && *env) return parse_seed(env);
  return kDefaultSeed;
}

link::LinkConfig make_link_config(const Params& p) {
  link::LinkConfig c;
  c.reader = link::Coil{p.reader_turns,   p.reader_radius_m,        p.reader_wire_diameter_m,
                        p.reader_height_m, link::kCopperResistivity, p.rel_permeability, false};
  c.mote = link::Coil{p.mote_turns,     p.mote_radius_m,        p.mote_wire_diameter_m,
                      p.mote_height_m,  link::kGoldResistivity, p.rel_permeability, true};
  c.separation = p.separation_m;
  c.drive_voltage = p.drive_voltage_v;
  c.resonance_freq = p.resonance_freq_hz;
  c.subcarrier_divider = p.subcarrier_divider;
  c.medium_rel_permeability = p.rel_permeability;
  try {
    c.validate();
  } catch (const std::exception& e) {
    throw ConfigError(fmt::format("invalid link parameters: {}", e.what()));
  }
  if (p.load_resistance_ohm == 0.0) return link::with_matched_load(c);
  c.load_impedance = {p.load_resistance_ohm, 0.0};
  return c;
}

link::NoiseModel make_noise_model(const Params& p) {
  if (p.noise_figure_db) return {p.temperature_k, p.noise_bandwidth_hz, *p.noise_figure_db};
  return link::NoiseModel::from_total_dbm(p.noise_total_dbm.value_or(-105.0), p.temperature_k,
                                          p.noise_bandwidth_hz);
}

std::string run(Command c, const Params& p, std::uint64_t seed) {
  p.validate();
  Out out;
  fmt::format_to(std::back_inserter(out), "{}\n", csv_header(c));
  switch (c) {
    case Command::LinkSweep: link_sweep(out, p); break;
    case Command::Table1: table1(out, p); break;
    case Command::BerSweep: ber_sweep(out, p, seed); break;
    case Command::MacScenario1: scenario1(out, p, seed); break;
    case Command::MacScenario2: scenario2(out, p, seed); break;
    case Command::MacCdma: cdma(out, p, seed); break;
    case Command::MacCompare: compare(out, p, seed); break;
  }
  return fmt::to_string(out);
}

}  // namespace biolink::harness
