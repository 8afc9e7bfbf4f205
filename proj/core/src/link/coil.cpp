#include "biolink/link/coil.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "biolink/common/errors.hpp"
#include "biolink/common/units.hpp"

namespace biolink::link {

using std::numbers::pi;

double Coil::wire_length() const { return turns * 2.0 * pi * loop_radius; }

void Coil::validate() const {
  if (turns < 1) throw DomainError("coil: turns must be >= 1");
  if (!(loop_radius > 0.0)) throw DomainError("coil: loop_radius must be > 0");
  if (!(wire_diameter > 0.0)) throw DomainError("coil: wire_diameter must be > 0");
  if (!(coil_height > 0.0)) throw DomainError("coil: coil_height must be > 0");
  if (!(resistivity > 0.0)) throw DomainError("coil: resistivity must be > 0");
  if (!(core_rel_permeability > 0.0))
    throw DomainError("coil: core_rel_permeability must be > 0");
  if (is_mote) {
    if (2.0 * loop_radius > kMoteMaxDimension)
      throw DomainError("mote coil: diameter " + std::to_string(2.0 * loop_radius) +
                        " m exceeds 250 um");
    if (coil_height > kMoteMaxDimension)
      throw DomainError("mote coil: height " + std::to_string(coil_height) +
                        " m exceeds 250 um");
  }
}

double skin_depth(double freq_hz, double resistivity, double rel_permeability) {
  if (!(freq_hz > 0.0) || !(resistivity > 0.0) || !(rel_permeability > 0.0))
    throw DomainError("skin_depth: inputs must be positive");
  return std::sqrt(resistivity / (pi * freq_hz * units::kMu0 * rel_permeability));
}

double ac_resistance(const Coil& coil, double freq_hz) {
  coil.validate();
  if (freq_hz < 0.0) throw DomainError("ac_resistance: frequency must be >= 0");
  const double length = coil.wire_length();
  const double radius = coil.wire_diameter / 2.0;
  const double dc = coil.resistivity * length / (pi * radius * radius);
  if (freq_hz == 0.0) return dc;
  const double delta = skin_depth(freq_hz, coil.resistivity);
  if (delta >= radius) return dc;
  return coil.resistivity * length / (pi * coil.wire_diameter * delta - pi * delta * delta);
}

double self_inductance(const Coil& coil) {
  coil.validate();
  const double a = coil.loop_radius;
  const double n = coil.turns;
  return units::kMu0 * coil.core_rel_permeability * n * n * pi * a * a /
         (coil.coil_height + 0.9 * a);
}

double mutual_inductance(const Coil& reader, const Coil& mote, double separation,
                         double medium_rel_permeability) {
  reader.validate();
  mote.validate();
  if (!(separation > 0.0)) throw DomainError("mutual_inductance: separation must be > 0");
  if (!(medium_rel_permeability > 0.0))
    throw DomainError("mutual_inductance: medium permeability must be > 0");
  const double ar2 = reader.loop_radius * reader.loop_radius;
  const double ab2 = mote.loop_radius * mote.loop_radius;
  // The larger loop sets the on-axis field seen by the smaller one.
  const double big2 = std::max(ar2, ab2);
  const double denom = 2.0 * std::pow(big2 + separation * separation, 1.5);
  return units::kMu0 * medium_rel_permeability * pi * reader.turns * mote.turns * ar2 * ab2 /
         denom;
}

double tuning_capacitance(double inductance, double freq_hz) {
  if (!(inductance > 0.0) || !(freq_hz > 0.0))
    throw DomainError("tuning_capacitance: inputs must be positive");
  const double w = 2.0 * pi * freq_hz;
  return 1.0 / (w * w * inductance);
}

std::complex<double> tank_impedance(const Coil& coil, double tuning_cap, double freq_hz) {
  if (!(freq_hz > 0.0)) throw DomainError("tank_impedance: frequency must be > 0");
  const double w = 2.0 * pi * freq_hz;
  const double reactance = w * self_inductance(coil) - 1.0 / (w * tuning_cap);
  return {ac_resistance(coil, freq_hz), reactance};
}

}  // namespace biolink::link
