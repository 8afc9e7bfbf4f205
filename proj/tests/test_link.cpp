#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "biolink/common/errors.hpp"
#include "biolink/common/units.hpp"
#include "biolink/link/coil.hpp"
#include "biolink/link/link_budget.hpp"
#include "biolink/link/reference.hpp"
#include "doctest.h"

using namespace biolink;
using namespace biolink::link;
using std::numbers::pi;

namespace {

// Exact mutual inductance of two coaxial filament loops (Maxwell).
double loop_pair_mutual(double a, double b, double r, double mu) {
  const double k = std::sqrt(4.0 * a * b / ((a + b) * (a + b) + r * r));
  return mu * units::kMu0 * std::sqrt(a * b) *
         ((2.0 / k - k) * std::comp_ellint_1(k) - 2.0 / k * std::comp_ellint_2(k));
}

// Current-sheet solenoid: Lorenz inductance with Nagaoka's coefficient.
double nagaoka_inductance(int n, double a, double h) {
  const double d = 2.0 * a;
  const double k2 = d * d / (d * d + h * h);
  const double k = std::sqrt(k2);
  const double kp = std::sqrt(1.0 - k2);
  const double kn = 4.0 / (3.0 * pi * kp) *
                    ((1.0 - k2) / k2 * std::comp_ellint_1(k) -
                     (1.0 - 2.0 * k2) / k2 * std::comp_ellint_2(k) - k);
  return units::kMu0 * n * n * pi * a * a / h * kn;
}

Coil plain_coil(int n, double a, double d, double h) {
  return Coil{n, a, d, h, kCopperResistivity, 1.0, false};
}

}  // namespace

TEST_SUITE("link") {

TEST_CASE("skin depth of copper at 1 MHz") {
  const double expected = std::sqrt(1.68e-8 / (pi * 1e6 * 4e-7 * pi));
  CHECK(skin_depth(1e6, kCopperResistivity) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(skin_depth(1e6, kCopperResistivity) == doctest::Approx(65.2e-6).epsilon(2e-3));
  CHECK(skin_depth(4e6, kCopperResistivity) == doctest::Approx(skin_depth(1e6, kCopperResistivity) / 2));
  CHECK_THROWS_AS(skin_depth(0.0, kCopperResistivity), DomainError);
}

TEST_CASE("AC resistance is DC below the crossover and continuous across it") {
  const Coil c = plain_coil(10, 0.01, 100e-6, 0.005);
  const double area = pi * 50e-6 * 50e-6;
  const double r_dc = c.resistivity * c.wire_length() / area;
  CHECK(ac_resistance(c, 10.0) == doctest::Approx(r_dc));

  // Frequency where the skin depth equals the wire radius.
  const double f_x = c.resistivity / (pi * units::kMu0 * 50e-6 * 50e-6);
  CHECK(ac_resistance(c, f_x * (1 - 1e-9)) == doctest::Approx(ac_resistance(c, f_x * (1 + 1e-9))).epsilon(1e-6));

  const double f = 100e6;
  const double delta = skin_depth(f, c.resistivity);
  const double annulus = pi * c.wire_diameter * delta - pi * delta * delta;
  CHECK(ac_resistance(c, f) == doctest::Approx(c.resistivity * c.wire_length() / annulus));
  CHECK(ac_resistance(c, 2 * f) > ac_resistance(c, f));
}

TEST_CASE("Wheeler inductance tracks the Nagaoka current sheet") {
  for (double ratio : {0.8, 1.0, 2.0, 5.0, 10.0}) {
    CAPTURE(ratio);
    const Coil c = plain_coil(40, 0.02, 200e-6, 0.02 * ratio);
    CHECK(self_inductance(c) == doctest::Approx(nagaoka_inductance(40, 0.02, 0.02 * ratio)).epsilon(0.01));
  }
  Coil c = plain_coil(40, 0.02, 200e-6, 0.04);
  const double l1 = self_inductance(c);
  c.core_rel_permeability = 10.0;
  CHECK(self_inductance(c) == doctest::Approx(10.0 * l1));
}

TEST_CASE("dipole mutual inductance agrees with the filament-loop integral") {
  const Coil reader = reference_reader_coil();
  const Coil mote = reference_mote_coil();
  for (double r : {0.01, 0.03, 0.06, 0.1}) {
    CAPTURE(r);
    const double exact =
        reader.turns * mote.turns * loop_pair_mutual(reader.loop_radius, mote.loop_radius, r, 1.0);
    CHECK(mutual_inductance(reader, mote, r, 1.0) == doctest::Approx(exact).epsilon(1e-4));
  }
  CHECK(mutual_inductance(reader, mote, 0.05, 1.0) == doctest::Approx(mutual_inductance(mote, reader, 0.05, 1.0)));
  CHECK(mutual_inductance(reader, mote, 0.05, 10.0) ==
        doctest::Approx(10.0 * mutual_inductance(reader, mote, 0.05, 1.0)));
}

TEST_CASE("tuned tank is purely resistive at resonance") {
  const Coil c = reference_reader_coil();
  const double f = 13.56e6;
  const double cap = tuning_capacitance(self_inductance(c), f);
  const auto z = tank_impedance(c, cap, f);
  CHECK(z.real() == doctest::Approx(ac_resistance(c, f)));
  CHECK(std::abs(z.imag()) < 1e-9 * std::abs(z.real()) + 1e-9);
  CHECK(tank_impedance(c, cap, 1.1 * f).imag() > 0.0);
}

TEST_CASE("mote coil respects the implant size bound") {
  Coil m = reference_mote_coil();
  CHECK_NOTHROW(m.validate());
  m.loop_radius = 1e-3;
  CHECK_THROWS_AS(m.validate(), DomainError);
  Coil bad = reference_reader_coil();
  bad.turns = 0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("link budget agrees with a direct 2x2 mesh solve") {
  using cplx = std::complex<double>;
  for (const auto& row : table1_rows()) {
    CAPTURE(row.resonance_freq);
    CAPTURE(row.mu);
    const LinkConfig cfg = table1_config(row.resonance_freq, row.subcarrier_divider, row.mu);
    const auto b = link_budget(cfg, reference_noise());

    const double f = cfg.resonance_freq;
    const double w = 2 * pi * f;
    const double m = mutual_inductance(cfg.reader, cfg.mote, cfg.separation, cfg.medium_rel_permeability);
    const cplx z11 = tank_impedance(cfg.reader, cfg.reader_tuning_capacitance(), f);
    const cplx z22 = tank_impedance(cfg.mote, cfg.mote_tuning_capacitance(), f) + cfg.load_impedance;
    const cplx zm{0.0, w * m};
    // [z11 zm; zm z22] [i1; i2] = [v; 0]
    const cplx det = z11 * z22 - zm * zm;
    const cplx i1 = cfg.drive_voltage * z22 / det;
    const cplx i2 = -cfg.drive_voltage * zm / det;
    const double p_t = (cfg.drive_voltage * std::conj(i1)).real();
    const double p_r = cfg.load_impedance.real() * std::norm(i2);

    CHECK(b.transmitted_power_db == doctest::Approx(units::to_db(p_t)).epsilon(1e-9));
    CHECK(b.mote_received_power_w == doctest::Approx(p_r).epsilon(1e-9));
    CHECK(b.one_way_path_loss_db == doctest::Approx(units::to_db(p_t / p_r)).epsilon(1e-9));
    CHECK(b.received_backscatter_power_dbm ==
          doctest::Approx(b.transmitted_power_db + 30 - 2 * b.one_way_path_loss_db - b.sideband_attenuation_db));
    CHECK(b.snr_db == doctest::Approx(b.received_backscatter_power_dbm + 105.0));
  }
}

TEST_CASE("sideband attenuation") {
  CHECK(sideband_attenuation_db(0.0, 0.1) == 0.0);
  CHECK(sideband_attenuation_db(50.0, 0.01) == doctest::Approx(10 * std::log10(2.0)));
  CHECK(sideband_attenuation_db(100.0, 0.01) > sideband_attenuation_db(50.0, 0.01));
}

TEST_CASE("noise model") {
  const NoiseModel n{290.0, 200e3, 0.0};
  CHECK(n.thermal_dbm() == doctest::Approx(-120.97).epsilon(1e-4));
  const auto fixed = NoiseModel::from_total_dbm(-105.0);
  CHECK(fixed.total_dbm() == doctest::Approx(-105.0).epsilon(1e-12));
  CHECK(fixed.noise_figure_db == doctest::Approx(15.97).epsilon(1e-3));
}

TEST_CASE("backscatter sweep") {
  std::vector<double> d;
  for (int i = 1; i <= 10; ++i) d.push_back(i * 0.01);
  const auto pts = backscatter_sweep(reference_config(), reference_noise(), d);
  REQUIRE(pts.size() == d.size());
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].p_re_dbm < pts[i - 1].p_re_dbm);

  const std::vector<double> empty;
  CHECK_THROWS_AS(backscatter_sweep(reference_config(), reference_noise(), empty), ArgumentError);
  const std::vector<double> unordered{0.05, 0.04};
  CHECK_THROWS_AS(backscatter_sweep(reference_config(), reference_noise(), unordered), ArgumentError);
}

TEST_CASE("a lossless load receives nothing and is rejected") {
  LinkConfig cfg = reference_config();
  cfg.load_impedance = {0.0, 0.0};
  CHECK_THROWS_AS(link_budget(cfg, reference_noise()), SingularityError);
  cfg.load_impedance = {-1.0, 0.0};
  CHECK_THROWS(link_budget(cfg, reference_noise()));
}

TEST_CASE("reference geometry is reproduced by the fit") {
  const auto fit = fit_reference_geometry();
  CHECK(fit.reader.turns == kReaderTurns);
  CHECK(fit.mote.turns == kMoteTurns);
  CHECK(fit.reader.wire_diameter == doctest::Approx(kReaderWireDiameter).epsilon(1e-3));
  CHECK(fit.mote.wire_diameter == doctest::Approx(kMoteWireDiameter).epsilon(1e-3));
  CHECK(fit.reader_sideband_db >= 40.0);
  CHECK(fit.worst_p_re_error_db < 3.0);
}

TEST_CASE("published rows within 3 dB at 1 and 13.56 MHz") {
  for (const auto& row : table1_rows()) {
    if (row.resonance_freq > 50e6) continue;
    const auto b = link_budget(table1_config(row.resonance_freq, row.subcarrier_divider, row.mu), reference_noise());
    CAPTURE(row.resonance_freq);
    CAPTURE(row.mu);
    CHECK(std::abs(b.received_backscatter_power_dbm - row.p_re_dbm) <= 3.0);
  }
}

}
