#include <doctest.h>

#include <cmath>
#include <vector>

#include "pumpsim/displacement.hpp"
#include "pumpsim/errors.hpp"
#include "pumpsim/units.hpp"
#include "support.hpp"

using namespace pumpsim;

namespace {

double trapezoid(const std::vector<double>& y, double h) {
  double acc = 0.0;
  for (std::size_t i = 1; i < y.size(); ++i) acc += 0.5 * (y[i - 1] + y[i]);
  return acc * h;
}

std::vector<DisplacementSample> cubic_samples() {
  // V(theta) = 3e-9 theta^2 - 4e-11 theta^3, peak at theta = 50
  std::vector<DisplacementSample> s;
  for (int i = 0; i <= 14; ++i) {
    const double th = 50.0 * i / 14.0;
    s.push_back({th, 3e-9 * th * th - 4e-11 * th * th * th});
  }
  return s;
}

}  // namespace

TEST_CASE("an exact cubic is reproduced through the sample points") {
  const auto samples = cubic_samples();
  const RollerDisplacementCurve curve = fit_displacement(samples);
  for (const auto& s : samples) {
    CHECK(std::abs(curve.volume_at(s.angle_deg) - s.volume) <=
          1e-10 * 2.5e-6);
  }
  CHECK(curve.support_end_deg() == doctest::Approx(50.0).epsilon(1e-6));
  CHECK(curve.v_max() == doctest::Approx(2.5e-6).epsilon(1e-9));
}

TEST_CASE("fewer than seven distinct angles are rejected") {
  std::vector<DisplacementSample> s;
  for (int i = 0; i < 6; ++i) {
    s.push_back({i * 10.0, i * 1e-7});
  }
  CHECK_THROWS_AS(fit_displacement(s), Error);
  try {
    fit_displacement(s);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientSamples);
  }

  // seven listed samples that collapse to six distinct angles
  s.push_back({50.0, 5.2e-7});
  CHECK_THROWS_AS(fit_displacement(s), Error);
}

TEST_CASE("bad samples are rejected outright") {
  auto s = cubic_samples();
  s[3].volume = -1e-9;
  CHECK_THROWS_AS(fit_displacement(s), Error);

  s = cubic_samples();
  s[3].angle_deg = 400.0;
  CHECK_THROWS_AS(fit_displacement(s), Error);

  s = cubic_samples();
  s[3].volume = std::nan("");
  CHECK_THROWS_AS(fit_displacement(s), Error);
}

TEST_CASE("bench displacement data fits the documented curve") {
  const RollerDisplacementCurve curve = testsupport::bench_curve();
  CHECK(curve.samples().size() == 15);
  CHECK(curve.support_end_deg() == doctest::Approx(50.53).epsilon(1e-5));
  CHECK(units::m3_to_ml(curve.v_max()) ==
        doctest::Approx(2.060279).epsilon(1e-4));
  // small negative intercept left by the least-squares fit
  CHECK(units::m3_to_ml(curve.volume_at(0.0)) ==
        doctest::Approx(-0.000279).epsilon(2e-2));
}

TEST_CASE("repeated angles are averaged before fitting") {
  auto with_duplicates = cubic_samples();
  const double th = with_duplicates[5].angle_deg;
  const double v = with_duplicates[5].volume;
  with_duplicates[5].volume = v * 0.9;
  with_duplicates.push_back({th, v * 1.1});

  auto averaged = cubic_samples();  // mean of 0.9v and 1.1v is v

  const auto c1 = fit_displacement(with_duplicates).coefficients();
  const auto c2 = fit_displacement(averaged).coefficients();
  for (std::size_t k = 0; k < c1.size(); ++k) {
    CHECK(std::abs(c1[k] - c2[k]) <= 1e-12 * (1e-9 + std::abs(c2[k])));
  }
}

TEST_CASE("a pronounced dip inside the support is flagged") {
  std::vector<DisplacementSample> s;
  const double angles[] = {0, 5, 10, 15, 20, 25, 30, 35, 40, 45, 50};
  const double volumes_ml[] = {0.0, 0.5, 1.2, 1.8, 2.0, 1.2,
                               0.9, 1.3, 1.8, 2.0, 2.05};
  for (int i = 0; i < 11; ++i) {
    s.push_back({angles[i], units::ml_to_m3(volumes_ml[i])});
  }
  CHECK_THROWS_AS(fit_displacement(s), Error);
  try {
    fit_displacement(s);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonMonotoneData);
  }
}

TEST_CASE("refitting the fitted values changes nothing") {
  const RollerDisplacementCurve first = fit_displacement(cubic_samples());
  std::vector<DisplacementSample> resampled;
  for (const auto& s : first.samples()) {
    // the fitted value at zero can undershoot by roundoff only
    resampled.push_back(
        {s.angle_deg, std::max(0.0, first.volume_at(s.angle_deg))});
  }
  const RollerDisplacementCurve second = fit_displacement(resampled);

  // compare in the scaled domain where every coefficient is a volume
  double scale = 1.0;
  const double span = first.samples().back().angle_deg;
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(std::abs(first.coefficients()[k] - second.coefficients()[k]) *
              scale <=
          1e-9 * first.v_max());
    scale *= span;
  }
}

TEST_CASE("pulse duration is the support swept at the motor speed") {
  const RollerDisplacementCurve curve = testsupport::bench_curve();
  const double d60 = pulse_duration(curve, MotorSpeed::from_rpm(60.0));
  CHECK(d60 == doctest::Approx(50.53 / 360.0).epsilon(1e-5));
  const double d120 = pulse_duration(curve, MotorSpeed::from_rpm(120.0));
  CHECK(d120 == doctest::Approx(0.5 * d60).epsilon(1e-12));
}

TEST_CASE("pulse samples integrate back to the displaced volume") {
  const RollerDisplacementCurve curve = testsupport::bench_curve();
  const double swept = curve.v_max() - curve.volume_at(0.0);
  for (double omega : {1.0, 2.0 * units::pi, 20.0}) {
    const auto pulse = pulse_shape(curve, MotorSpeed::from_rad_s(omega), 1e-4);
    CHECK(trapezoid(pulse, 1e-4) == doctest::Approx(swept).epsilon(5e-3));
  }
}

TEST_CASE("doubling the speed doubles the peak and keeps the area") {
  const RollerDisplacementCurve curve = testsupport::bench_curve();
  const auto slow = pulse_shape(curve, MotorSpeed::from_rpm(60.0), 1e-5);
  const auto fast = pulse_shape(curve, MotorSpeed::from_rpm(120.0), 1e-5);

  double peak_slow = 0.0;
  double peak_fast = 0.0;
  for (double v : slow) peak_slow = std::max(peak_slow, v);
  for (double v : fast) peak_fast = std::max(peak_fast, v);
  CHECK(peak_fast == doctest::Approx(2.0 * peak_slow).epsilon(1e-3));
  CHECK(trapezoid(fast, 1e-5) ==
        doctest::Approx(trapezoid(slow, 1e-5)).epsilon(1e-3));
}

TEST_CASE("a linear ramp gives a flat pulse") {
  std::vector<DisplacementSample> s;
  for (int i = 0; i <= 10; ++i) {
    s.push_back({5.0 * i, 4e-8 * 5.0 * i});
  }
  const RollerDisplacementCurve curve = fit_displacement(s);
  const auto pulse = pulse_shape(curve, MotorSpeed::from_rpm(60.0), 1e-4);
  REQUIRE(pulse.size() > 100);
  const double want = 4e-8 * 360.0;  // slope times degrees per second
  for (double v : pulse) {
    CHECK(v == doctest::Approx(want).epsilon(1e-6));
  }
}

TEST_CASE("pulse sampling rejects bad arguments") {
  const RollerDisplacementCurve curve = testsupport::bench_curve();

  CHECK_THROWS_AS(pulse_shape(curve, MotorSpeed::from_rpm(0.0), 1e-4), Error);
  CHECK_THROWS_AS(pulse_shape(curve, MotorSpeed::from_rpm(60.0), 0.0), Error);

  // fewer than ten samples across the pulse
  CHECK_THROWS_AS(pulse_shape(curve, MotorSpeed::from_rpm(60.0), 0.05), Error);
  try {
    pulse_shape(curve, MotorSpeed::from_rpm(60.0), 0.05);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidStep);
  }
}

TEST_CASE("sampled pulse values are never negative") {
  const RollerDisplacementCurve curve = testsupport::bench_curve();
  const auto pulse = pulse_shape(curve, MotorSpeed::from_rpm(100.0), 1e-4);
  for (double v : pulse) {
    CHECK(v >= 0.0);
  }
}
