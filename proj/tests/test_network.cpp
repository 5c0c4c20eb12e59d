#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "pumpsim/analysis.hpp"
#include "pumpsim/errors.hpp"
#include "pumpsim/network.hpp"
#include "pumpsim/pulse_train.hpp"
#include "pumpsim/units.hpp"
#include "support.hpp"

using namespace pumpsim;

namespace {

// a flat train carrying only the nominal flow
PulseTrain constant_train(double h, double t_sim) {
  PulseTrain train;
  train.h = h;
  train.t_sim = t_sim;
  const std::size_t n = static_cast<std::size_t>(std::ceil(t_sim / h)) + 1;
  train.q_ed_in.assign(n, 0.0);
  train.q_ed_out.assign(n, 0.0);
  return train;
}

}  // namespace

TEST_CASE("derivatives vanish at the steady operating point") {
  const NetworkParams p = testsupport::bench_network();
  const double q = nominal_flow(testsupport::bench_pump(),
                                MotorSpeed::from_rpm(60.0));
  const NetworkState s = dc_fixed_point(p, q);

  CHECK(units::pa_to_kpa(s.p_in) == doctest::Approx(85.575054).epsilon(1e-6));
  CHECK(units::pa_to_kpa(s.p_out) == doctest::Approx(91.698946).epsilon(1e-6));

  const NetworkState d = derivatives(s, p, q, 0.0, 0.0);
  CHECK(std::abs(d.p_in) <= 1e-6);
  CHECK(std::abs(d.p_out) <= 1e-6);
  CHECK(std::abs(d.q_l_in) <= 1e-9);
  CHECK(std::abs(d.q_l_out) <= 1e-9);
}

TEST_CASE("inlet chamber drains at the nominal rate from standstill") {
  const NetworkParams p = testsupport::bench_network();
  const double q = nominal_flow(testsupport::bench_pump(),
                                MotorSpeed::from_rpm(60.0));
  NetworkState s;
  s.p_in = p.p_res;
  s.p_out = p.p_res;
  s.q_l_in = 0.0;
  s.q_l_out = 0.0;

  const NetworkState d = derivatives(s, p, q, 0.0, 0.0);
  // -q_nom / C_in, about -765.5 kPa/s
  CHECK(units::pa_to_kpa(d.p_in) ==
        doctest::Approx(-765.5).epsilon(2e-5));
  CHECK(units::pa_to_kpa(d.p_out) == doctest::Approx(765.5).epsilon(2e-5));
}

TEST_CASE("a stronger inlet draw pulls the inlet pressure down faster") {
  const NetworkParams p = testsupport::bench_network();
  const double q = 2e-5;
  const NetworkState s = dc_fixed_point(p, q);

  double last = derivatives(s, p, q, 0.0, 0.0).p_in;
  for (double draw : {1e-6, 2e-6, 4e-6}) {
    const double d = derivatives(s, p, q, draw, 0.0).p_in;
    CHECK(d > last);
    last = d;
  }
  // the inlet draw reduces what the pump takes from the chamber, so the
  // derivative grows with it; a release on the outlet side works the same way
  CHECK(derivatives(s, p, q, 0.0, -1e-6).p_out <
        derivatives(s, p, q, 0.0, 0.0).p_out);
}

TEST_CASE("fixed point is a fixed point for random parameters") {
  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    NetworkParams p;
    p.p_res = 1e4 + 2e5 * u(rng);
    p.r_in = 1e7 * std::pow(10.0, 2.0 * u(rng));
    p.r_out = 1e7 * std::pow(10.0, 2.0 * u(rng));
    p.c_in = 1e-12 * std::pow(10.0, 2.0 * u(rng));
    p.c_out = 1e-12 * std::pow(10.0, 2.0 * u(rng));
    p.l_in = 1e5 * std::pow(10.0, 2.0 * u(rng));
    p.l_out = 1e5 * std::pow(10.0, 2.0 * u(rng));
    const double q = 1e-6 + 5e-5 * u(rng);

    const NetworkState s = dc_fixed_point(p, q);
    const NetworkState d = derivatives(s, p, q, 0.0, 0.0);
    const double scale = p.p_res / std::min(p.l_in, p.l_out) +
                         q / std::min(p.c_in, p.c_out);
    CHECK(std::abs(d.p_in) <= 1e-12 * scale);
    CHECK(std::abs(d.p_out) <= 1e-12 * scale);
    CHECK(std::abs(d.q_l_in) <= 1e-12 * scale);
    CHECK(std::abs(d.q_l_out) <= 1e-12 * scale);
  }
}

TEST_CASE("steady drive holds the operating point through a full run") {
  const NetworkParams p = testsupport::bench_network();
  const PumpGeometry g = testsupport::bench_pump();
  const MotorSpeed speed = MotorSpeed::from_rpm(60.0);

  const SimulationResult res =
      simulate(p, g, constant_train(1e-3, 5.0), speed);
  for (std::size_t k = 0; k < res.t.size(); ++k) {
    CHECK(std::abs(units::pa_to_kpa(res.p_in[k]) - 85.575054) <=
          0.001 * 85.575054);
    CHECK(std::abs(units::pa_to_kpa(res.p_out[k]) - 91.698946) <=
          0.001 * 91.698946);
  }
}

TEST_CASE("step response matches the series RLC closed form") {
  const NetworkParams p = testsupport::bench_network();
  const PumpGeometry g = testsupport::bench_pump();
  const MotorSpeed speed = MotorSpeed::from_rpm(60.0);
  const double q1 = nominal_flow(g, speed);
  const double h = 1e-4;

  NetworkState init;
  init.p_in = p.p_res;
  init.p_out = p.p_res;
  init.q_l_in = 0.0;
  init.q_l_out = 0.0;

  const SimulationResult res =
      simulate(p, g, constant_train(h, 2.0), speed, init);

  const double alpha = p.r_in / (2.0 * p.l_in);
  const double wd =
      std::sqrt(1.0 / (p.l_in * p.c_in) - alpha * alpha);
  const double a = -q1;
  const double b = alpha * a / wd;

  double worst = 0.0;
  double swing = 0.0;
  for (std::size_t k = 0; k < res.t.size(); ++k) {
    const double t = res.t[k];
    const double e = std::exp(-alpha * t);
    const double i =
        q1 + e * (a * std::cos(wd * t) + b * std::sin(wd * t));
    const double di = e * ((-alpha * a + wd * b) * std::cos(wd * t) -
                           (alpha * b + wd * a) * std::sin(wd * t));
    const double exact = p.p_res - p.r_in * i - p.l_in * di;

    worst = std::max(worst, std::abs(res.p_in[k] - exact));
    swing = std::max(swing, std::abs(exact - p.p_res));
    // the outlet side charges as the exact mirror image
    CHECK(std::abs(res.p_out[k] - (2.0 * p.p_res - exact)) <=
          std::abs(res.p_in[k] - exact) + 1e-6 * p.p_res);
  }
  CHECK(worst <= 1e-3 * swing);
}

TEST_CASE("accumulated chamber charge matches the pressure change") {
  const NetworkParams p = testsupport::bench_network();
  const PumpGeometry g = testsupport::bench_pump();
  const MotorSpeed speed = MotorSpeed::from_rpm(100.0);
  const PulseTrain train =
      build_train(testsupport::bench_curve(), g, speed, 1e-3, 5.0);
  const SimulationResult res = simulate(p, g, train, speed);

  double net = 0.0;   // trapezoid of q_l_in - q_in
  double gross = 0.0;
  for (std::size_t k = 1; k < res.t.size(); ++k) {
    const double f0 = res.q_l_in[k - 1] - res.q_in[k - 1];
    const double f1 = res.q_l_in[k] - res.q_in[k];
    net += 0.5 * (f0 + f1) * train.h;
    gross += 0.5 * std::abs(res.q_in[k - 1] + res.q_in[k]) * train.h;
  }
  const double stored = p.c_in * (res.p_in.back() - res.p_in.front());
  CHECK(std::abs(net - stored) <= 0.005 * gross);
}

TEST_CASE("outlet response mirrors the inlet response one offset later") {
  const NetworkParams p = testsupport::bench_network();
  const PumpGeometry g = testsupport::bench_pump();
  const MotorSpeed speed = MotorSpeed::from_rpm(60.0);
  const double h = 1e-3;
  const PulseTrain train =
      build_train(testsupport::bench_curve(), g, speed, h, 10.0);
  const SimulationResult res = simulate(p, g, train, speed);

  const std::size_t w = static_cast<std::size_t>(std::llround(2.0 / h));
  const std::size_t sh =
      static_cast<std::size_t>(std::llround(train.t3 / h));
  const std::size_t n = res.t.size();

  AlignedSeries s;
  for (std::size_t k = w; k + sh + 1 < n; ++k) {
    s.reference.push_back(res.p_out[k] - p.p_res);
    s.candidate.push_back(p.p_res - res.p_in[k + sh]);
  }
  CHECK(pearson(s) >= 0.99);
}

TEST_CASE("halving the step hardly moves the solution") {
  const NetworkParams p = testsupport::bench_network();
  const PumpGeometry g = testsupport::bench_pump();
  const MotorSpeed speed = MotorSpeed::from_rpm(100.0);

  const PulseTrain coarse =
      build_train(testsupport::bench_curve(), g, speed, 1e-3, 5.0);
  const PulseTrain fine =
      build_train(testsupport::bench_curve(), g, speed, 5e-4, 5.0);
  const SimulationResult rc = simulate(p, g, coarse, speed);
  const SimulationResult rf = simulate(p, g, fine, speed);

  for (std::size_t k = 0; k < rc.t.size(); ++k) {
    const double rel =
        std::abs(rc.p_in[k] - rf.p_in[2 * k]) / std::abs(rf.p_in[2 * k]);
    CHECK(rel < 0.002);
  }
}

TEST_CASE("parameter validation rejects non-positive entries") {
  const auto expect_invalid = [](NetworkParams p) {
    CHECK_THROWS_AS(validate_params(p), Error);
  };

  NetworkParams p = testsupport::bench_network();
  CHECK_NOTHROW(validate_params(p));

  p = testsupport::bench_network();
  p.p_res = 0.0;
  expect_invalid(p);

  p = testsupport::bench_network();
  p.r_out = -1.0;
  expect_invalid(p);

  p = testsupport::bench_network();
  p.c_in = 0.0;
  expect_invalid(p);

  p = testsupport::bench_network();
  p.l_out = std::nan("");
  expect_invalid(p);
}

TEST_CASE("an unusable train is rejected") {
  const NetworkParams p = testsupport::bench_network();
  const PumpGeometry g = testsupport::bench_pump();
  const MotorSpeed speed = MotorSpeed::from_rpm(60.0);

  PulseTrain train = constant_train(1e-3, 1.0);
  train.q_ed_out.pop_back();  // ragged lines
  CHECK_THROWS_AS(simulate(p, g, train, speed), Error);

  train = constant_train(1e-3, 1.0);
  train.h = 0.0;
  CHECK_THROWS_AS(simulate(p, g, train, speed), Error);
}

TEST_CASE("overflowing state is reported as non-finite") {
  const NetworkParams p = testsupport::bench_network();
  const PumpGeometry g = testsupport::bench_pump();
  const MotorSpeed speed = MotorSpeed::from_rpm(60.0);

  NetworkState init;
  init.p_in = 1e308;
  init.p_out = 1e308;
  init.q_l_in = 1e308;
  init.q_l_out = 1e308;

  CHECK_THROWS_AS(simulate(p, g, constant_train(1e-3, 1.0), speed, init),
                  Error);
  try {
    simulate(p, g, constant_train(1e-3, 1.0), speed, init);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonFiniteState);
  }
}

TEST_CASE("solver diagnostics are filled in") {
  const NetworkParams p = testsupport::bench_network();
  const PumpGeometry g = testsupport::bench_pump();
  const MotorSpeed speed = MotorSpeed::from_rpm(100.0);
  const PulseTrain train =
      build_train(testsupport::bench_curve(), g, speed, 1e-3, 2.0);
  const SimulationResult res = simulate(p, g, train, speed);

  CHECK(res.diagnostics.steps == res.t.size() - 1);
  CHECK(res.diagnostics.max_newton_iterations >= 1);
  CHECK(res.diagnostics.max_newton_iterations <= 5);
  CHECK(res.q_in.size() == res.t.size());
  CHECK(res.q_out.size() == res.t.size());
}
