#pragma once

#include <complex>
#include <span>
#include <vector>

#include "biolink/link/coil.hpp"

namespace biolink::link {

struct LinkConfig {
  Coil reader;
  Coil mote;
  double separation = 0.06;          // m
  double drive_voltage = 3.8;        // V (amplitude)
  double resonance_freq = 13.56e6;   // Hz
  int subcarrier_divider = 6;        // f_s = f_c / 2^n
  std::complex<double> load_impedance{0.0, 0.0};
  double medium_rel_permeability = 1.0;

  double subcarrier_freq() const;
  double reader_tuning_capacitance() const;
  double mote_tuning_capacitance() const;

  /// Separation at or below which the coils touch.
  double contact_distance() const;

  void validate() const;
};

/// Returns `config` with the load set to the conjugate of the mote tank
/// impedance at resonance (i.e. R_L = R_b(f_c)).
LinkConfig with_matched_load(LinkConfig config);

struct ReflectedImpedance {
  std::complex<double> mote_on_reader;  // Z_br
  std::complex<double> reader_on_mote;  // Z_rb
};

/// Transformed impedances each side sees from the other at `freq_hz`.
ReflectedImpedance reflected_impedance(const LinkConfig& config, double freq_hz);

/// Receiver noise floor: thermal kTB plus noise figure.
struct NoiseModel {
  double temperature = 290.0;   // K
  double bandwidth = 200e3;     // Hz
  double noise_figure_db = 0.0;

  double thermal_dbm() const;
  double total_dbm() const;

  /// Noise model whose figure is chosen so total_dbm() == total.
  static NoiseModel from_total_dbm(double total, double temperature = 290.0,
                                   double bandwidth = 200e3);
};

struct LinkBudget {
  double transmitted_power_db = 0.0;          // P_tx, dBW
  double received_backscatter_power_dbm = 0;  // P_re
  double one_way_path_loss_db = 0.0;          // PL
  double sideband_attenuation_db = 0.0;       // A_s
  double quality_factor = 0.0;                // unloaded reader tank Q
  double bandwidth = 0.0;                     // 2 f_s, data bandwidth around f_c
  double tank_bandwidth = 0.0;                // f_c / Q
  double reader_resistance = 0.0;             // R_r at f_c
  double mote_resistance = 0.0;               // R_b at f_c
  double mutual_inductance = 0.0;
  double mote_received_power_w = 0.0;         // P_r
  double snr_db = 0.0;

  double total_loss_db() const { return 2.0 * one_way_path_loss_db + sideband_attenuation_db; }
};

/// Sideband attenuation of a tank with quality factor `q` at offset ratio
/// f_s / f_c.
double sideband_attenuation_db(double q, double offset_ratio);

LinkBudget link_budget(const LinkConfig& config, const NoiseModel& noise);

struct SweepPoint {
  double distance;   // m
  double p_re_dbm;
  double snr_db;
};

/// link_budget evaluated at each separation in `distances` (ascending).
std::vector<SweepPoint> backscatter_sweep(const LinkConfig& config, const NoiseModel& noise,
                                          std::span<const double> distances);

}  // namespace biolink::link
