#include "biolink/harness/config.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace biolink::harness {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view requirement,
                            std::string_view value) {
  throw ConfigError(fmt::format("{} must be {} (got '{}')", key, requirement, value), 0,
                    std::string(key));
}

double parse_real(std::string_view key, std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) bad_value(key, "a finite number", text);
  return v;
}

std::int64_t parse_integer(std::string_view key, std::string_view text) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec == std::errc{} && ptr == end) return v;
  // Accept integral values written in scientific notation, e.g. 1e7.
  double d = 0.0;
  const auto [dptr, dec] = std::from_chars(text.data(), end, d);
  if (dec != std::errc{} || dptr != end || d != std::floor(d) || std::abs(d) > 9e15)
    bad_value(key, "an integer", text);
  return static_cast<std::int64_t>(d);
}

std::vector<std::string_view> split(std::string_view text, char sep, std::string_view key) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    const auto item = trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (item.empty()) bad_value(key, "a list without empty items", text);
    out.push_back(item);
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

// List items may be plain values or inclusive ranges written start:step:stop.
template <typename T, typename Parse>
std::vector<T> parse_list(std::string_view key, std::string_view text, Parse parse) {
  std::vector<T> out;
  for (auto item : split(text, ',', key)) {
    if (item.find(':') == std::string_view::npos) {
      out.push_back(static_cast<T>(parse(key, item)));
      continue;
    }
    const auto parts = split(item, ':', key);
    if (parts.size() != 3) bad_value(key, "a range of the form start:step:stop", item);
    const double a = parse(key, parts[0]), step = parse(key, parts[1]), b = parse(key, parts[2]);
    if (!(step > 0) || b < a) bad_value(key, "a range with positive step and stop >= start", item);
    const auto n = static_cast<std::int64_t>(std::floor((b - a) / step + 1e-9));
    if (n > 1'000'000) bad_value(key, "a range of at most 10^6 items", item);
    for (std::int64_t i = 0; i <= n; ++i) out.push_back(static_cast<T>(a + static_cast<double>(i) * step));
  }
  return out;
}

struct Key {
  std::string_view name;
  std::string_view help;
  std::function<void(Params&, std::string_view key, std::string_view value)> set;
};

struct Bound {
  std::string_view text;
  std::function<bool(double)> ok;
};

const Bound kPositive{"> 0", [](double x) { return x > 0.0; }};
const Bound kNonNegative{">= 0", [](double x) { return x >= 0.0; }};
const Bound kAny{"finite", [](double) { return true; }};

Key real(std::string_view name, std::string_view help, double Params::*field, Bound bound) {
  return {name, help, [field, bound](Params& p, std::string_view k, std::string_view v) {
            const double x = parse_real(k, v);
            if (!bound.ok(x)) bad_value(k, bound.text, v);
            p.*field = x;
          }};
}

Key optional_real(std::string_view name, std::string_view help, std::optional<double> Params::*field,
                  Bound bound) {
  return {name, help, [field, bound](Params& p, std::string_view k, std::string_view v) {
            const double x = parse_real(k, v);
            if (!bound.ok(x)) bad_value(k, bound.text, v);
            p.*field = x;
          }};
}

template <typename Int>
Key integer(std::string_view name, std::string_view help, Int Params::*field, std::int64_t lo,
            std::int64_t hi) {
  return {name, help, [=](Params& p, std::string_view k, std::string_view v) {
            const auto x = parse_integer(k, v);
            if (x < lo || x > hi) bad_value(k, fmt::format("in [{}, {}]", lo, hi), v);
            p.*field = static_cast<Int>(x);
          }};
}

Key real_list(std::string_view name, std::string_view help, std::vector<double> Params::*field,
              Bound bound) {
  return {name, help, [field, bound](Params& p, std::string_view k, std::string_view v) {
            auto xs = parse_list<double>(k, v, parse_real);
            for (double x : xs)
              if (!bound.ok(x)) bad_value(k, fmt::format("a list of values {}", bound.text), v);
            p.*field = std::move(xs);
          }};
}

Key int_list(std::string_view name, std::string_view help, std::vector<int> Params::*field,
             std::int64_t lo, std::function<bool(std::int64_t)> extra = {},
             std::string_view extra_text = {}) {
  return {name, help, [=](Params& p, std::string_view k, std::string_view v) {
            auto xs = parse_list<std::int64_t>(k, v, [](std::string_view kk, std::string_view t) {
              return static_cast<double>(parse_integer(kk, t));
            });
            std::vector<int> out;
            for (auto x : xs) {
              if (x < lo || x > 1'000'000) bad_value(k, fmt::format("a list of integers in [{}, 1000000]", lo), v);
              if (extra && !extra(x)) bad_value(k, extra_text, v);
              out.push_back(static_cast<int>(x));
            }
            p.*field = std::move(out);
          }};
}

Key word_list(std::string_view name, std::string_view help,
              std::vector<std::string> Params::*field, std::vector<std::string_view> allowed) {
  return {name, help, [=](Params& p, std::string_view k, std::string_view v) {
            std::vector<std::string> out;
            for (auto item : split(v, ',', k)) {
              if (std::find(allowed.begin(), allowed.end(), item) == allowed.end())
                bad_value(k, fmt::format("one of {}", fmt::join(allowed, ", ")), item);
              out.emplace_back(item);
            }
            p.*field = std::move(out);
          }};
}

Key table1_key() {
  return {"table1_rows", "table1 rows as freq_hz/divider/mu, comma separated",
          [](Params& p, std::string_view k, std::string_view v) {
            std::vector<Table1Spec> rows;
            for (auto item : split(v, ',', k)) {
              const auto parts = split(item, '/', k);
              if (parts.size() != 3) bad_value(k, "items of the form freq_hz/divider/mu", item);
              Table1Spec r{parse_real(k, parts[0]), static_cast<int>(parse_integer(k, parts[1])),
                           parse_real(k, parts[2])};
              if (!(r.resonance_freq_hz > 0) || r.subcarrier_divider < 0 || r.subcarrier_divider > 30 ||
                  !(r.rel_permeability > 0))
                bad_value(k, "freq > 0, divider in [0, 30], mu > 0", item);
              rows.push_back(r);
            }
            p.table1_rows = std::move(rows);
          }};
}

const std::vector<Key>& registry() {
  static const std::vector<Key> keys = [] {
    std::vector<Key> k;
    k.push_back(real("reader_radius_m", "reader coil loop radius", &Params::reader_radius_m, kPositive));
    k.push_back(integer("reader_turns", "reader coil turns", &Params::reader_turns, 1, 100'000));
    k.push_back(real("reader_wire_diameter_m", "reader wire diameter", &Params::reader_wire_diameter_m, kPositive));
    k.push_back(real("reader_height_m", "reader coil height", &Params::reader_height_m, kPositive));
    k.push_back(real("mote_radius_m", "mote coil loop radius", &Params::mote_radius_m, kPositive));
    k.push_back(integer("mote_turns", "mote coil turns", &Params::mote_turns, 1, 100'000));
    k.push_back(real("mote_wire_diameter_m", "mote wire diameter", &Params::mote_wire_diameter_m, kPositive));
    k.push_back(real("mote_height_m", "mote coil height", &Params::mote_height_m, kPositive));
    k.push_back(real("separation_m", "reader-mote distance for table1", &Params::separation_m, kPositive));
    k.push_back(real("drive_voltage_v", "reader drive amplitude", &Params::drive_voltage_v, kPositive));
    k.push_back(real("resonance_freq_hz", "tank resonance f_c", &Params::resonance_freq_hz, kPositive));
    k.push_back(integer("subcarrier_divider", "f_s = f_c / 2^n", &Params::subcarrier_divider, 0, 30));
    k.push_back(real("rel_permeability", "core and medium relative permeability", &Params::rel_permeability, kPositive));
    k.push_back(real("load_resistance_ohm", "mote load, 0 for matched", &Params::load_resistance_ohm, kNonNegative));
    k.push_back(optional_real("noise_total_dbm", "total receiver noise (default -105)", &Params::noise_total_dbm, kAny));
    k.push_back(optional_real("noise_figure_db", "noise figure over kTB", &Params::noise_figure_db, kNonNegative));
    k.push_back(real("temperature_k", "noise temperature", &Params::temperature_k, kPositive));
    k.push_back(real("noise_bandwidth_hz", "noise bandwidth", &Params::noise_bandwidth_hz, kPositive));
    k.push_back(real("distance_start_m", "first sweep distance", &Params::distance_start_m, kPositive));
    k.push_back(real("distance_stop_m", "last sweep distance", &Params::distance_stop_m, kPositive));
    k.push_back(real("distance_step_m", "sweep distance step", &Params::distance_step_m, kPositive));
    k.push_back(table1_key());
    k.push_back(word_list("modulations", "ber-sweep modulations: ask, bpsk", &Params::modulations, {"ask", "bpsk"}));
    k.push_back(word_list("codes", "ber-sweep codes: none, hamming15_11, rs31_26", &Params::codes,
                          {"none", "hamming15_11", "rs31_26"}));
    k.push_back(integer("min_bits", "Monte Carlo minimum information bits", &Params::min_bits, 1, 1'000'000'000'000));
    k.push_back(integer("min_errors", "Monte Carlo minimum bit errors", &Params::min_errors, 0, 1'000'000'000));
    k.push_back(integer("max_bits", "Monte Carlo bit budget per point", &Params::max_bits, 1, 1'000'000'000'000));
    k.push_back(real_list("rates_bps", "mote bit rates", &Params::rates_bps, kPositive));
    k.push_back(real_list("read_times_s", "read durations", &Params::read_times_s, kNonNegative));
    k.push_back(integer("packet_bytes", "packet length", &Params::packet_bytes, 1, 1'000'000));
    k.push_back(integer("frame_slots", "ALOHA frame length", &Params::frame_slots, 1, 100'000'000));
    k.push_back(integer("trials", "MAC trials per point", &Params::trials, 1, 10'000'000));
    k.push_back(int_list("n_motes", "mote counts (ranges as start:step:stop)", &Params::n_motes, 0));
    k.push_back(integer("n_step", "mac-scenario1 mote count step", &Params::n_step, 1, 1'000'000));
    k.push_back(integer("n_limit", "mac-scenario1 largest mote count tried", &Params::n_limit, 1, 1'000'000));
    k.push_back(int_list(
        "code_lengths", "CDMA code lengths", &Params::code_lengths, 1,
        [](std::int64_t x) { return std::has_single_bit(static_cast<std::uint64_t>(x)); },
        "a list of powers of two"));
    k.push_back(Key{"code_family", "CDMA codes: random or walsh",
                    [](Params& p, std::string_view key, std::string_view v) {
                      if (v != "random" && v != "walsh") bad_value(key, "random or walsh", v);
                      p.code_family = std::string(v);
                    }});
    k.push_back(int_list("duration_slots", "mac-compare read durations in slots", &Params::duration_slots, 1));
    k.push_back(integer("workers", "worker threads", &Params::workers, 1, 1024));
    return k;
  }();
  return keys;
}

const Key* find_key(std::string_view name) {
  for (const auto& k : registry())
    if (k.name == name) return &k;
  return nullptr;
}

void assign(Params& p, std::string_view key, std::string_view value) {
  const Key* k = find_key(key);
  if (!k) throw ConfigError(fmt::format("unknown key '{}'", key), 0, std::string(key));
  if (value.empty()) bad_value(key, "non-empty", value);
  k->set(p, key, value);
}

ConfigError at_line(std::string_view origin, int line, const ConfigError& e) {
  return ConfigError(fmt::format("{}:{}: {}", origin, line, e.what()), line, e.key());
}

}  // namespace

std::vector<double> Params::distances() const {
  std::vector<double> out;
  const auto n =
      static_cast<std::int64_t>(std::floor((distance_stop_m - distance_start_m) / distance_step_m + 1e-9));
  for (std::int64_t i = 0; i <= n; ++i) out.push_back(distance_start_m + static_cast<double>(i) * distance_step_m);
  return out;
}

void Params::validate() const {
  if (noise_total_dbm && noise_figure_db)
    throw ConfigError("noise_total_dbm and noise_figure_db are mutually exclusive", 0, "noise_figure_db");
  if (distance_stop_m < distance_start_m)
    throw ConfigError("distance_stop_m must be >= distance_start_m", 0, "distance_stop_m");
  if ((distance_stop_m - distance_start_m) / distance_step_m > 1e6)
    throw ConfigError("distance grid exceeds 10^6 points", 0, "distance_step_m");
  if (max_bits < min_bits) throw ConfigError("max_bits must be >= min_bits", 0, "max_bits");
}

Params parse_config(std::string_view text, std::string_view origin) {
  Params p;
  std::set<std::string, std::less<>> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(fmt::format("{}:{}: malformed line, expected key = value", origin, line_no), line_no);
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(fmt::format("{}:{}: malformed line, missing key", origin, line_no), line_no);
    if (!seen.insert(std::string(key)).second)
      throw ConfigError(fmt::format("{}:{}: duplicate key '{}'", origin, line_no, key), line_no,
                        std::string(key));
    try {
      assign(p, key, value);
    } catch (const ConfigError& e) {
      throw at_line(origin, line_no, e);
    }
  }
  p.validate();
  return p;
}

Params load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path.string()));
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.string());
}

void apply_override(Params& params, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos)
    throw ConfigError(fmt::format("--set '{}': expected key=value", assignment));
  const auto key = trim(assignment.substr(0, eq));
  try {
    assign(params, key, trim(assignment.substr(eq + 1)));
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("--set: {}", e.what()), 0, e.key());
  }
  params.validate();
}

std::vector<KeyInfo> known_keys() {
  std::vector<KeyInfo> out;
  for (const auto& k : registry()) out.push_back({k.name, k.help});
  return out;
}

}  // namespace biolink::harness
