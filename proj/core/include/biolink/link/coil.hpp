#pragma once

#include <complex>

namespace biolink::link {

/// Largest outer dimension (diameter and height) allowed for an implanted coil.
inline constexpr double kMoteMaxDimension = 250e-6;

/// Copper and gold resistivities used for the reader and mote coils.
inline constexpr double kCopperResistivity = 1.68e-8;  // ohm*m
inline constexpr double kGoldResistivity = 2.44e-8;    // ohm*m

/// Solenoid antenna coil. Lengths in meters, resistivity in ohm*m.
struct Coil {
  int turns = 1;
  double loop_radius = 0.0;
  double wire_diameter = 0.0;
  double coil_height = 0.0;
  double resistivity = kCopperResistivity;
  double core_rel_permeability = 1.0;
  bool is_mote = false;

  double wire_length() const;

  /// Throws DomainError if any field is non-positive or a mote coil exceeds
  /// the implant size bound.
  void validate() const;
};

/// Current penetration depth in a conductor.
double skin_depth(double freq_hz, double resistivity, double rel_permeability = 1.0);

/// Series resistance of the coil winding at `freq_hz`. Below the crossover
/// (skin depth >= wire radius) this is the DC resistance; above it, current
/// flows in an annulus one skin depth thick.
double ac_resistance(const Coil& coil, double freq_hz);

/// Wheeler short-solenoid inductance, including the core permeability.
double self_inductance(const Coil& coil);

/// Coaxial magnetic-dipole mutual inductance. `separation` is measured along
/// the common axis from the reader's winding plane to the mote.
double mutual_inductance(const Coil& reader, const Coil& mote, double separation,
                         double medium_rel_permeability);

/// Capacitance that resonates `inductance` at `freq_hz`.
double tuning_capacitance(double inductance, double freq_hz);

/// Series R-L-C impedance of a tuned coil at `freq_hz`.
std::complex<double> tank_impedance(const Coil& coil, double tuning_cap, double freq_hz);

}  // namespace biolink::link
