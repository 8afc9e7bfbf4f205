#include "biolink/link/link_budget.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "biolink/common/errors.hpp"
#include "biolink/common/units.hpp"

namespace biolink::link {

using std::numbers::pi;
using cplx = std::complex<double>;

double LinkConfig::subcarrier_freq() const {
  return resonance_freq / std::ldexp(1.0, subcarrier_divider);
}

double LinkConfig::reader_tuning_capacitance() const {
  return tuning_capacitance(self_inductance(reader), resonance_freq);
}

double LinkConfig::mote_tuning_capacitance() const {
  return tuning_capacitance(self_inductance(mote), resonance_freq);
}

double LinkConfig::contact_distance() const { return mote.coil_height / 2.0; }

void LinkConfig::validate() const {
  reader.validate();
  mote.validate();
  if (!(separation > 0.0)) throw DomainError("link: separation must be > 0");
  if (separation <= contact_distance())
    throw DomainError("link: separation " + std::to_string(separation) +
                      " m is inside the coil contact distance");
  if (!(drive_voltage > 0.0)) throw DomainError("link: drive_voltage must be > 0");
  if (!(resonance_freq > 0.0)) throw DomainError("link: resonance_freq must be > 0");
  if (subcarrier_divider < 0 || subcarrier_divider > 30)
    throw DomainError("link: subcarrier_divider must be in [0, 30]");
  if (!(medium_rel_permeability > 0.0))
    throw DomainError("link: medium permeability must be > 0");
  if (load_impedance.real() < 0.0) throw DomainError("link: load resistance must be >= 0");
}

LinkConfig with_matched_load(LinkConfig config) {
  config.load_impedance = cplx{ac_resistance(config.mote, config.resonance_freq), 0.0};
  return config;
}

ReflectedImpedance reflected_impedance(const LinkConfig& config, double freq_hz) {
  config.validate();
  const double w = 2.0 * pi * freq_hz;
  const double m = mutual_inductance(config.reader, config.mote, config.separation,
                                     config.medium_rel_permeability);
  const double wm2 = (w * m) * (w * m);
  const cplx z_mote =
      tank_impedance(config.mote, config.mote_tuning_capacitance(), freq_hz) +
      config.load_impedance;
  const cplx z_reader =
      tank_impedance(config.reader, config.reader_tuning_capacitance(), freq_hz);
  if (std::abs(z_mote) == 0.0 || std::abs(z_reader) == 0.0)
    throw SingularityError("reflected_impedance: zero loop impedance at " +
                           std::to_string(freq_hz) + " Hz");
  return {wm2 / z_mote, wm2 / z_reader};
}

double NoiseModel::thermal_dbm() const {
  if (!(temperature > 0.0) || !(bandwidth > 0.0))
    throw DomainError("noise: temperature and bandwidth must be > 0");
  return units::watts_to_dbm(units::kBoltzmann * temperature * bandwidth);
}

double NoiseModel::total_dbm() const { return thermal_dbm() + noise_figure_db; }

NoiseModel NoiseModel::from_total_dbm(double total, double temperature, double bandwidth) {
  NoiseModel n{temperature, bandwidth, 0.0};
  n.noise_figure_db = total - n.thermal_dbm();
  return n;
}

double sideband_attenuation_db(double q, double offset_ratio) {
  const double x = 2.0 * q * offset_ratio;
  return units::to_db(1.0 + x * x);
}

LinkBudget link_budget(const LinkConfig& config, const NoiseModel& noise) {
  config.validate();
  const double fc = config.resonance_freq;
  const double w = 2.0 * pi * fc;
  const cplx v_r{config.drive_voltage, 0.0};

  const cplx z_r = tank_impedance(config.reader, config.reader_tuning_capacitance(), fc);
  const cplx z_b = tank_impedance(config.mote, config.mote_tuning_capacitance(), fc);
  const cplx z_l = config.load_impedance;
  const auto refl = reflected_impedance(config, fc);
  const double m = mutual_inductance(config.reader, config.mote, config.separation,
                                     config.medium_rel_permeability);

  // Power delivered by the reader source and into the mote load.
  const double p_t = (v_r * v_r / (refl.mote_on_reader + z_r)).real();
  const cplx v_rb = cplx{0.0, w * m} * v_r / z_r;  // open-circuit induced voltage
  const cplx z_loop = refl.reader_on_mote + z_b + z_l;
  if (std::abs(z_loop) == 0.0) throw SingularityError("link_budget: zero mote loop impedance");
  const double p_r = z_l.real() * std::norm(v_rb) / std::norm(z_loop);
  if (!(p_r > 0.0)) throw SingularityError("link_budget: no power reaches the mote load");

  LinkBudget b;
  b.reader_resistance = z_r.real();
  b.mote_resistance = z_b.real();
  b.mutual_inductance = m;
  b.mote_received_power_w = p_r;
  b.transmitted_power_db = units::watts_to_dbw(p_t);
  b.one_way_path_loss_db = units::to_db(p_t / p_r);
  b.quality_factor = w * self_inductance(config.reader) / b.reader_resistance;
  b.sideband_attenuation_db =
      sideband_attenuation_db(b.quality_factor, config.subcarrier_freq() / fc);
  b.bandwidth = 2.0 * config.subcarrier_freq();
  b.tank_bandwidth = fc / b.quality_factor;
  b.received_backscatter_power_dbm =
      units::watts_to_dbm(p_t) - 2.0 * b.one_way_path_loss_db - b.sideband_attenuation_db;
  b.snr_db = b.received_backscatter_power_dbm - noise.total_dbm();
  return b;
}

std::vector<SweepPoint> backscatter_sweep(const LinkConfig& config, const NoiseModel& noise,
                                          std::span<const double> distances) {
  if (distances.empty()) throw ArgumentError("backscatter_sweep: empty distance list");
  for (std::size_t i = 1; i < distances.size(); ++i)
    if (!(distances[i] > distances[i - 1]))
      throw ArgumentError("backscatter_sweep: distances must be strictly ascending");
  std::vector<SweepPoint> out;
  out.reserve(distances.size());
  LinkConfig c = config;
  for (double d : distances) {
    c.separation = d;
    const auto b = link_budget(c, noise);
    out.push_back({d, b.received_backscatter_power_dbm, b.snr_db});
  }
  return out;
}

}  // namespace biolink::link
