#include "biolink/link/reference.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace biolink::link {

namespace {

constexpr std::array<Table1Row, 6> kTable1{{
    {1e6, 4, 1.0, 5.881, 0.7533, 3.90, -128.37, 61.14, 40.0},
    {1e6, 4, 10.0, 5.881, 0.7533, 3.90, -108.38, 41.14, 60.0},
    {1e6, 4, 50.0, 5.881, 0.7533, 3.90, -95.47, 27.17, 75.0},
    {13.56e6, 6, 1.0, 19.64, 0.7542, -1.34, -98.82, 43.74, 40.0},
    {13.56e6, 6, 10.0, 19.64, 0.7542, -1.34, -80.88, 23.77, 62.0},
    {100e6, 7, 1.0, 52.13, 0.8577, -5.58, -87.95, 31.18, 50.0},
}};

Coil reader_template(int turns, double wire_diameter, double core_mu) {
  return Coil{turns, kReaderRadius, wire_diameter, kReaderHeight, kCopperResistivity,
              core_mu, false};
}

Coil mote_template(int turns, double wire_diameter, double core_mu) {
  return Coil{turns, kMoteRadius, wire_diameter, kMoteHeight, kGoldResistivity, core_mu, true};
}

LinkConfig pair_config(const Coil& reader, const Coil& mote, double fc, int divider, double mu) {
  LinkConfig c;
  c.reader = reader;
  c.reader.core_rel_permeability = mu;
  c.mote = mote;
  c.mote.core_rel_permeability = mu;
  c.separation = kTable1Separation;
  c.drive_voltage = 3.8;
  c.resonance_freq = fc;
  c.subcarrier_divider = divider;
  c.medium_rel_permeability = mu;
  return with_matched_load(c);
}

double worst_log_error(const Coil& coil, std::span<const std::pair<double, double>> targets) {
  double worst = 0.0;
  for (const auto& [f, ohms] : targets)
    worst = std::max(worst, std::abs(std::log(ac_resistance(coil, f) / ohms)));
  return worst;
}

}  // namespace

std::span<const Table1Row> table1_rows() { return kTable1; }

Coil reference_reader_coil(double core_mu) {
  return reader_template(kReaderTurns, kReaderWireDiameter, core_mu);
}

Coil reference_mote_coil(double core_mu) {
  return mote_template(kMoteTurns, kMoteWireDiameter, core_mu);
}

LinkConfig table1_config(double resonance_freq, int subcarrier_divider, double mu) {
  return pair_config(reference_reader_coil(), reference_mote_coil(), resonance_freq,
                     subcarrier_divider, mu);
}

LinkConfig reference_config() { return table1_config(13.56e6, 6, 1.0); }

NoiseModel reference_noise() { return NoiseModel::from_total_dbm(-105.0); }

double fit_wire_diameter(Coil coil, std::span<const std::pair<double, double>> targets) {
  // Coarse log-spaced scan, then golden-section refinement around the best
  // bracket. The objective is a max of unimodal terms, so it is unimodal too.
  constexpr int kScan = 400;
  const double lo = std::log(1e-6), hi = std::log(5e-3);
  auto eval = [&](double log_d) {
    coil.wire_diameter = std::exp(log_d);
    return worst_log_error(coil, targets);
  };
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kScan; ++i) {
    const double v = eval(lo + (hi - lo) * i / kScan);
    if (v < best_val) best_val = v, best = i;
  }
  double a = lo + (hi - lo) * std::max(0, best - 1) / kScan;
  double b = lo + (hi - lo) * std::min(kScan, best + 1) / kScan;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = eval(c), fd = eval(d);
  for (int it = 0; it < 80; ++it) {
    if (fc < fd) {
      b = d, d = c, fd = fc;
      c = b - g * (b - a), fc = eval(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + g * (b - a), fd = eval(d);
    }
  }
  return std::exp((a + b) / 2.0);
}

GeometryFit fit_reference_geometry() {
  std::vector<std::pair<double, double>> reader_targets, mote_targets;
  for (const auto& row : kTable1) {
    if (row.mu != 1.0) continue;
    reader_targets.emplace_back(row.resonance_freq, row.reader_resistance);
    if (row.resonance_freq < 50e6) mote_targets.emplace_back(row.resonance_freq, row.mote_resistance);
  }
  const double published_sideband = kTable1[0].sideband_db;

  GeometryFit fit;
  for (int turns = 1; turns <= 2000; ++turns) {
    Coil reader = reader_template(turns, 1e-4, 1.0);
    reader.wire_diameter = fit_wire_diameter(reader, reader_targets);
    const double r = ac_resistance(reader, 1e6);
    const double q = 2.0 * std::numbers::pi * 1e6 * self_inductance(reader) / r;
    const double as = sideband_attenuation_db(q, 1.0 / 16.0);
    if (as >= published_sideband) {
      fit.reader = reader;
      fit.reader_sideband_db = as;
      break;
    }
  }

  double best_err = std::numeric_limits<double>::infinity();
  for (int turns = 1; turns <= 2000; ++turns) {
    Coil mote = mote_template(turns, 1e-5, 1.0);
    mote.wire_diameter = fit_wire_diameter(mote, mote_targets);
    double sq = 0.0, worst = 0.0;
    for (const auto& row : kTable1) {
      if (row.resonance_freq > 50e6) continue;
      const auto cfg = pair_config(fit.reader, mote, row.resonance_freq,
                                   row.subcarrier_divider, row.mu);
      const double err =
          link_budget(cfg, reference_noise()).received_backscatter_power_dbm - row.p_re_dbm;
      sq += err * err;
      worst = std::max(worst, std::abs(err));
    }
    if (sq < best_err) {
      best_err = sq;
      fit.mote = mote;
      fit.worst_p_re_error_db = worst;
    }
  }
  return fit;
}

}  // namespace biolink::link
