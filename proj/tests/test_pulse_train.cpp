#include <doctest.h>

#include <cmath>
#include <vector>

#include "pumpsim/errors.hpp"
#include "pumpsim/pulse_train.hpp"
#include "pumpsim/units.hpp"
#include "support.hpp"

using namespace pumpsim;

namespace {

double rect_sum(const std::vector<double>& y, double h) {
  double acc = 0.0;
  for (double v : y) acc += v;
  return acc * h;
}

}  // namespace

TEST_CASE("pulse and separation periods of the bench pump") {
  const PumpGeometry g = testsupport::bench_pump();
  const MotorSpeed s60 = MotorSpeed::from_rpm(60.0);

  CHECK(pulse_period(g, s60) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  // (180 - 50.53 - 60) degrees of free raceway at 360 deg/s
  CHECK(separation_period(g, s60) ==
        doctest::Approx(0.1929722222222222).epsilon(1e-12));

  const MotorSpeed s120 = MotorSpeed::from_rpm(120.0);
  CHECK(pulse_period(g, s120) ==
        doctest::Approx(0.5 * pulse_period(g, s60)).epsilon(1e-12));
}

TEST_CASE("train placement for three rollers at one revolution per second") {
  const PumpGeometry g = testsupport::bench_pump();
  const MotorSpeed speed = MotorSpeed::from_rpm(60.0);
  const RollerDisplacementCurve curve = testsupport::bench_curve();
  const double h = 1e-3;
  const PulseTrain train = build_train(curve, g, speed, h, 1.0);

  CHECK(train.q_ed_in.size() == 1001);
  CHECK(train.q_ed_out.size() == 1001);
  CHECK(train.t1 == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(train.t2 == train.t1);

  REQUIRE(train.outlet_start_indices.size() == 3);
  REQUIRE(train.inlet_start_indices.size() == 3);
  CHECK(train.outlet_start_indices[0] == 0);
  CHECK(train.inlet_start_indices[0] == 193);

  // every recorded start sits within half a step of the exact time
  for (std::size_t k = 0; k < 3; ++k) {
    const double exact_out = k * train.t2;
    const double exact_in = train.t3 + k * train.t1;
    CHECK(std::abs(train.outlet_start_indices[k] * h - exact_out) <=
          0.5 * h + 1e-12);
    CHECK(std::abs(train.inlet_start_indices[k] * h - exact_in) <=
          0.5 * h + 1e-12);
  }
}

TEST_CASE("two rollers produce two pulses per line in one second") {
  PumpGeometry g = testsupport::bench_pump();
  g.roller_count = 2;
  const PulseTrain train = build_train(
      testsupport::bench_curve(), g, MotorSpeed::from_rpm(60.0), 1e-3, 1.0);
  CHECK(train.outlet_start_indices.size() == 2);
  CHECK(train.inlet_start_indices.size() == 2);
  CHECK(train.t1 == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("each line integrates to rollers times swept volume") {
  const PumpGeometry g = testsupport::bench_pump();
  const PulseTrain train = build_train(
      testsupport::bench_curve(), g, MotorSpeed::from_rpm(60.0), 1e-3, 1.0);

  // three complete pulses of about 2.06 ml each
  const double v_in = units::m3_to_ml(rect_sum(train.q_ed_in, train.h));
  const double v_out = units::m3_to_ml(rect_sum(train.q_ed_out, train.h));
  CHECK(v_in == doctest::Approx(3.0 * 2.06).epsilon(0.01));
  CHECK(v_out == doctest::Approx(3.0 * 2.06).epsilon(0.01));
}

TEST_CASE("pulse magnitudes are non-negative on both lines") {
  const PulseTrain train =
      build_train(testsupport::bench_curve(), testsupport::bench_pump(),
                  MotorSpeed::from_rpm(100.0), 1e-3, 2.0);
  for (double v : train.q_ed_in) CHECK(v >= 0.0);
  for (double v : train.q_ed_out) CHECK(v >= 0.0);
}

TEST_CASE("inlet pulses are the outlet pulses played backwards") {
  const PulseTrain train =
      build_train(testsupport::bench_curve(), testsupport::bench_pump(),
                  MotorSpeed::from_rpm(60.0), 1e-3, 1.0);

  // first full pulse on each line; the pulse spans 141 samples here
  const std::size_t in0 = train.inlet_start_indices[0];
  const std::size_t len = 141;
  for (std::size_t k = 0; k < len; ++k) {
    CHECK(train.q_ed_in[in0 + k] == train.q_ed_out[len - 1 - k]);
  }
}

TEST_CASE("mean pulse draw equals swept volume per period") {
  const PumpGeometry g = testsupport::bench_pump();
  const MotorSpeed speed = MotorSpeed::from_rpm(60.0);
  const double h = 1e-4;
  const PulseTrain train =
      build_train(testsupport::bench_curve(), g, speed, h, 10.0);

  // average over whole periods, skipping the offset head
  const std::size_t first =
      static_cast<std::size_t>(std::llround(train.t3 / h));
  const std::size_t per =
      static_cast<std::size_t>(std::llround(train.t1 / h));
  const std::size_t periods = (train.q_ed_in.size() - 1 - first) / per;
  double acc = 0.0;
  for (std::size_t k = first; k < first + periods * per; ++k) {
    acc += train.q_ed_in[k];
  }
  const double mean = acc / static_cast<double>(periods * per);

  const double expect =
      g.roller_count * g.max_roller_volume * speed.omega() / (2.0 * units::pi);
  CHECK(mean == doctest::Approx(expect).epsilon(0.01));
}

TEST_CASE("a curve that displaces nothing yields a flat train") {
  std::vector<DisplacementSample> s;
  for (int i = 0; i <= 10; ++i) s.push_back({5.0 * i, 0.0});
  const RollerDisplacementCurve curve = fit_displacement(s);

  const PulseTrain train = build_train(curve, testsupport::bench_pump(),
                                       MotorSpeed::from_rpm(60.0), 1e-3, 1.0);
  CHECK(train.inlet_start_indices.empty());
  CHECK(train.outlet_start_indices.empty());
  for (double v : train.q_ed_in) CHECK(v == 0.0);
  for (double v : train.q_ed_out) CHECK(v == 0.0);
}

TEST_CASE("grid and window preconditions") {
  const PumpGeometry g = testsupport::bench_pump();
  const RollerDisplacementCurve curve = testsupport::bench_curve();
  const MotorSpeed speed = MotorSpeed::from_rpm(60.0);

  CHECK_THROWS_AS(build_train(curve, g, speed, 0.05, 1.0), Error);
  try {
    build_train(curve, g, speed, 0.05, 1.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GridTooCoarse);
  }

  // less than two pulse periods of simulated time
  CHECK_THROWS_AS(build_train(curve, g, speed, 1e-3, 0.5), Error);
  try {
    build_train(curve, g, speed, 1e-3, 0.5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("overlapping arcs shift the first inlet pulse off the grid") {
  PumpGeometry g = testsupport::bench_pump();
  g.contact_angle_deg = 70.0;  // separation period goes negative
  REQUIRE(engagement_overlaps(g));

  const PulseTrain train = build_train(
      testsupport::bench_curve(), g, MotorSpeed::from_rpm(60.0), 1e-3, 1.0);
  CHECK(train.t3 < 0.0);
  REQUIRE(!train.inlet_start_indices.empty());
  // the clipped first pulse is not recorded as a start
  CHECK(train.inlet_start_indices[0] > 0);
  for (double v : train.q_ed_in) {
    CHECK(std::isfinite(v));
    CHECK(v >= 0.0);
  }
}
