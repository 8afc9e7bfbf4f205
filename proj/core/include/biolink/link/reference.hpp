#pragma once

#include <span>
#include <utility>
#include <vector>

#include "biolink/link/link_budget.hpp"

namespace biolink::link {

/// One row of the published link-budget table at 6 cm separation.
struct Table1Row {
  double resonance_freq;     // Hz
  int subcarrier_divider;    // f_s = f_c / 2^n
  double mu;                 // core and medium relative permeability
  double reader_resistance;  // ohm
  double mote_resistance;    // ohm
  double p_tx_db;            // dBW
  double p_re_dbm;
  double path_loss_db;
  double sideband_db;
};

/// Published rows, in table order.
std::span<const Table1Row> table1_rows();

inline constexpr double kReaderRadius = 0.05;      // m
inline constexpr double kMoteRadius = 50e-6;       // m
inline constexpr double kReaderHeight = 0.008;      // m
inline constexpr double kMoteHeight = kMoteMaxDimension;
inline constexpr double kTable1Separation = 0.06;  // m

/// Fitted reference geometry (see fit_reference_geometry).
inline constexpr int kReaderTurns = 65;
inline constexpr double kReaderWireDiameter = 339.6e-6;
inline constexpr int kMoteTurns = 345;
inline constexpr double kMoteWireDiameter = 69.6e-6;

Coil reference_reader_coil(double core_mu = 1.0);
Coil reference_mote_coil(double core_mu = 1.0);

/// Reference pair at 6 cm with `mu` applied to both cores and the medium,
/// load matched.
LinkConfig table1_config(double resonance_freq, int subcarrier_divider, double mu);

/// Physical-layer simulation parameters: 13.56 MHz, f_c/64, mu = 1.
LinkConfig reference_config();
NoiseModel reference_noise();

struct GeometryFit {
  Coil reader;
  Coil mote;
  double worst_p_re_error_db = 0.0;  // over the rows used in the fit
  double reader_sideband_db = 0.0;   // A_s at 1 MHz, mu = 1
};

/// Re-derives the reference geometry from the published table:
///  1. reader turns: smallest count whose 1 MHz, mu = 1 sideband attenuation
///     reaches the published 40 dB, with the wire diameter at each candidate
///     fitted (minimax log error) to R_r at 1, 13.56 and 100 MHz;
///  2. mote wire diameter fitted to R_b at 1 and 13.56 MHz for each candidate
///     turn count, and the count minimizing the squared P_re error summed
///     over the 1 and 13.56 MHz rows is kept.
/// Radii and heights are fixed inputs.
GeometryFit fit_reference_geometry();

/// Wire diameter minimizing the worst |ln(R/R_target)| over `targets`
/// (frequency, ohms) for `coil` with its other fields held fixed.
double fit_wire_diameter(Coil coil, std::span<const std::pair<double, double>> targets);

}  // namespace biolink::link
