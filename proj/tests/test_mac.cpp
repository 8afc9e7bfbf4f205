#include <algorithm>
#include <cmath>
#include <vector>

#include "biolink/common/errors.hpp"
#include "biolink/mac/aloha.hpp"
#include "biolink/mac/binary_tree.hpp"
#include "biolink/mac/cdma.hpp"
#include "biolink/mac/deployment.hpp"
#include "biolink/mac/scenarios.hpp"
#include "doctest.h"

using namespace biolink;
using namespace biolink::mac;

namespace {

// Expected singleton slots for n motes in one frame of s slots, by listing
// all s^n slot choices.
double enumerate_single_frame(int n, int s) {
  long total = 1;
  for (int i = 0; i < n; ++i) total *= s;
  double sum = 0.0;
  std::vector<int> pick(static_cast<std::size_t>(n));
  for (long code = 0; code < total; ++code) {
    long c = code;
    std::vector<int> hits(static_cast<std::size_t>(s), 0);
    for (int i = 0; i < n; ++i) {
      ++hits[static_cast<std::size_t>(c % s)];
      c /= s;
    }
    for (int h : hits) sum += (h == 1);
  }
  return sum / static_cast<double>(total);
}

MacScenario single_frame(int n, int s, int trials, std::uint64_t seed) {
  MacScenario sc;
  sc.n_motes = n;
  sc.frame_slots = s;
  sc.trials = trials;
  sc.seed = seed;
  sc.read_time_s = sc.read_time_for_slots(s);
  return sc;
}

MoteBits random_bits(int motes, int bits, Rng& rng) {
  MoteBits b(static_cast<std::size_t>(motes), std::vector<std::int8_t>(static_cast<std::size_t>(bits)));
  for (auto& row : b)
    for (auto& x : row) x = (rng() & 1u) ? 1 : -1;
  return b;
}

}  // namespace

TEST_SUITE("mac") {

TEST_CASE("binary tree iterations") {
  CHECK(binary_tree_iterations(1) == 1.0);
  CHECK(binary_tree_iterations(2) == 2.0);
  CHECK(binary_tree_iterations(1024) == 11.0);
  CHECK_THROWS_AS(binary_tree_iterations(0), DomainError);
  for (std::uint64_t n = 1; n < 2000; ++n) CHECK(binary_tree_iterations(n + 1) > binary_tree_iterations(n));
}

TEST_CASE("slot arithmetic") {
  MacScenario sc;
  sc.rate_bps = 20'000;
  sc.packet_bytes = 64;
  CHECK(sc.slot_duration() == doctest::Approx(0.0256).epsilon(1e-15));
  CHECK(sc.read_time_for_slots(128) == 3.2768);
  sc.read_time_s = 3.2768;
  CHECK(sc.slots_available() == 128);
  sc.read_time_s = 3.2767;
  CHECK(sc.slots_available() == 127);
  sc.rate_bps = 200e3;
  sc.read_time_s = 10.0;
  CHECK(sc.slots_available() == 3906);
  sc.frame_slots = 0;
  CHECK_THROWS_AS(sc.validate(), ArgumentError);
}

TEST_CASE("ALOHA trivial cases and counting bounds") {
  Rng rng(1);
  MacScenario sc = single_frame(1, 4, 1, 0);
  CHECK(aloha_simulate(sc, rng).successes == 1);
  sc.n_motes = 0;
  CHECK(aloha_simulate(sc, rng).successes == 0);
  CHECK(aloha_mean(sc).mean == 0.0);

  for (int n : {3, 20, 150}) {
    MacScenario s;
    s.n_motes = n;
    s.frame_slots = 8;
    s.read_time_s = s.read_time_for_slots(40);
    for (int t = 0; t < 50; ++t) {
      Rng r(static_cast<std::uint64_t>(t));
      const auto out = aloha_simulate(s, r);
      CHECK(out.successes <= n);
      CHECK(out.successes <= s.slots_available());
      CHECK(out.slots_used <= s.slots_available());
    }
  }
}

TEST_CASE("single frame matches exhaustive enumeration") {
  for (int n = 1; n <= 4; ++n)
    for (int s = 1; s <= 4; ++s) {
      CAPTURE(n);
      CAPTURE(s);
      const double exact = enumerate_single_frame(n, s);
      CHECK(aloha_single_frame_expectation(n, s) == doctest::Approx(exact).epsilon(1e-12));
      const auto m = aloha_mean(single_frame(n, s, 4000, 17));
      CHECK(std::abs(m.mean - exact) <= 3.0 * m.std_error + 1e-12);
    }
  const auto two = aloha_mean(single_frame(2, 2, 4000, 3));
  CHECK(std::abs(two.mean - 1.0) <= 3.0 * two.std_error);
}

TEST_CASE("single frame matches n(1-1/S)^(n-1)") {
  for (auto [n, s] : {std::pair{5, 16}, std::pair{10, 16}, std::pair{91, 128}}) {
    CAPTURE(n);
    const auto m = aloha_mean(single_frame(n, s, 2000, 23));
    CHECK(std::abs(m.mean - aloha_single_frame_expectation(n, s)) <= 3.0 * m.std_error);
  }
}

TEST_CASE("ALOHA mean is seed-determined, worker invariant and stable in trial count") {
  MacScenario sc;
  sc.n_motes = 60;
  sc.frame_slots = 32;
  sc.read_time_s = sc.read_time_for_slots(96);
  sc.trials = 200;
  const auto a = aloha_mean(sc, 1);
  const auto b = aloha_mean(sc, 4);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  sc.trials = 1600;
  const auto big = aloha_mean(sc, 2);
  CHECK(std::abs(big.mean - a.mean) <= 3.0 * std::hypot(a.std_error, big.std_error));
}

TEST_CASE("scenario 1 is monotone in read time and rate") {
  SweepOptions o;
  o.frame_slots = 16;
  o.trials = 30;
  const std::vector<double> rates{50e3, 100e3, 200e3};
  const std::vector<double> times{0.05, 0.2, 1.0};
  const auto rows = scenario1_sweep(rates, times, o);
  REQUIRE(rows.size() == 9);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t t = 1; t < 3; ++t) CHECK(rows[r * 3 + t].max_motes >= rows[r * 3 + t - 1].max_motes);
  for (std::size_t t = 0; t < 3; ++t)
    for (std::size_t r = 1; r < 3; ++r) CHECK(rows[r * 3 + t].max_motes >= rows[(r - 1) * 3 + t].max_motes);
  CHECK_THROWS_AS(scenario1_sweep(std::vector<double>{}, times, o), ArgumentError);
}

TEST_CASE("scenario 2 bounds and optimum") {
  SweepOptions o;
  o.frame_slots = 16;
  o.trials = 20;
  const std::vector<int> ns{0, 5, 40, 80};
  const std::vector<double> rates{20e3};
  const std::vector<double> times{0.256, 1.0};
  const auto rows = scenario2_sweep(ns, rates, times, o);
  REQUIRE(rows.size() == 8);
  for (const auto& r : rows) {
    MacScenario sc;
    sc.rate_bps = r.rate_bps;
    sc.read_time_s = r.read_time_s;
    CHECK(r.mean_successes <= std::min<double>(r.n_motes, static_cast<double>(sc.slots_available())));
    if (r.n_motes == 0) CHECK(r.mean_successes == 0.0);
  }
  const int best = optimum_deployment(rows, 20e3, 1.0);
  for (const auto& r : rows)
    if (r.read_time_s == 1.0) {
      const auto it = std::find_if(rows.begin(), rows.end(), [&](const Scenario2Row& x) {
        return x.read_time_s == 1.0 && x.n_motes == best;
      });
      CHECK(it->mean_successes >= r.mean_successes);
    }
  CHECK(optimum_deployment(rows, 1.0, 1.0) == 0);
}

TEST_CASE("global recommendation") {
  const DeploymentGeometry hemi;
  CHECK(hemi.zone_volume_cm3() == doctest::Approx(261.799).epsilon(1e-5));
  CHECK(global_recommendation(91, hemi) == 230'907);
  CHECK(global_recommendation(0, hemi) == 0);
  DeploymentGeometry doubled = hemi;
  doubled.body_volume_cm3 *= 2;
  CHECK(std::abs(global_recommendation(91, doubled) - 2 * global_recommendation(91, hemi)) <= 1);
  DeploymentGeometry sphere = hemi;
  sphere.zone_shape = ZoneShape::Sphere;
  CHECK(sphere.zone_volume_cm3() == doctest::Approx(2 * hemi.zone_volume_cm3()));
  CHECK_THROWS_AS(global_recommendation(-1, hemi), ArgumentError);
}

TEST_CASE("Walsh codes are orthogonal") {
  for (int len : {16, 32, 64, 128, 256}) {
    const auto codes = walsh_codes(len);
    REQUIRE(codes.size() == static_cast<std::size_t>(len));
    for (std::size_t i = 0; i < codes.size(); ++i)
      for (std::size_t j = i; j < codes.size(); ++j) {
        int dot = 0;
        for (int c = 0; c < len; ++c) dot += codes[i].chips[c] * codes[j].chips[c];
        REQUIRE(dot == (i == j ? len : 0));
      }
  }
  CHECK_THROWS_AS(walsh_codes(24), ArgumentError);
}

TEST_CASE("random chips are fair") {
  Rng rng(4);
  long sum = 0;
  const int len = 1 << 16;
  const auto code = random_code(len, rng);
  for (auto c : code.chips) {
    REQUIRE((c == 1 || c == -1));
    sum += c;
  }
  CHECK(std::abs(static_cast<double>(sum)) < 4.0 * std::sqrt(static_cast<double>(len)));
}

TEST_CASE("correlation-matrix despreading equals the chip-level receiver") {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const int len = 8 << (rng() % 4);
    const auto family = trial % 3 == 0 ? CodeFamily::Walsh : CodeFamily::Random;
    const auto codes = assign_codes(n, family, len, rng);
    const auto bits = random_bits(n, 64, rng);
    CAPTURE(n);
    CAPTURE(len);
    CHECK(cdma_successes(codes, bits) == cdma_successes_chip_level(codes, bits));
  }
}

TEST_CASE("zero correlation decides 1") {
  Rng rng(2);
  const auto code = random_code(16, rng);
  const std::vector<SpreadingCode> codes{code, code};
  const MoteBits bits{{1, 1}, {-1, -1}};
  CHECK(cdma_successes(codes, bits) == 1);
  CHECK(cdma_successes_chip_level(codes, bits) == 1);
}

TEST_CASE("orthogonal codes read every mote up to the code length") {
  for (int len : {16, 64}) {
    for (int n : {1, len / 2, len}) {
      CdmaScenario sc;
      sc.n_motes = n;
      sc.family = CodeFamily::Walsh;
      sc.code_length = len;
      sc.trials = 10;
      const auto m = cdma_simulate(sc);
      CHECK(m.mean == n);
      CHECK(m.min == n);
    }
  }
  CdmaScenario bad;
  bad.n_motes = 0;
  CHECK_THROWS_AS(cdma_simulate(bad), ArgumentError);
}

TEST_CASE("CDMA results are worker invariant") {
  CdmaScenario sc;
  sc.n_motes = 12;
  sc.code_length = 64;
  sc.trials = 40;
  CHECK(cdma_simulate(sc, 1).mean == cdma_simulate(sc, 3).mean);
}

TEST_CASE("comparison CDMA rows do not depend on the duration") {
  CompareOptions o;
  o.trials = 20;
  const std::vector<int> ns{10, 150};
  const auto short_rows = compare_schemes(ns, 128, o);
  const auto long_rows = compare_schemes(ns, 1280, o);
  REQUIRE(short_rows.size() == 4);
  for (std::size_t i = 0; i < short_rows.size(); ++i) {
    CHECK(short_rows[i].n_motes == long_rows[i].n_motes);
    if (short_rows[i].scheme == Scheme::Cdma) CHECK(short_rows[i].mean_successes == long_rows[i].mean_successes);
  }
  CHECK(short_rows[0].read_time_s == 3.2768);
}

}
