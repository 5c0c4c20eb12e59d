#include "pumpsim/network.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "pumpsim/errors.hpp"

namespace pumpsim {

void validate_params(const NetworkParams& p) {
  const auto reject = [](const char* what) {
    fail(ErrorCode::InvalidArgument,
         std::string("network parameter must be positive and finite: ") + what);
  };
  const auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!ok(p.p_res)) reject("reservoir pressure");
  if (!ok(p.r_in)) reject("inlet resistance");
  if (!ok(p.r_out)) reject("outlet resistance");
  if (!ok(p.c_in)) reject("inlet compliance");
  if (!ok(p.c_out)) reject("outlet compliance");
  if (!ok(p.l_in)) reject("inlet inertance");
  if (!ok(p.l_out)) reject("outlet inertance");
}

// q_ed_in enters as a positive draw on the inlet chamber, q_ed_out as a
// negative release on the outlet chamber; both vanish between pulses
NetworkState derivatives(const NetworkState& s, const NetworkParams& p,
                         double q_nom, double q_ed_in, double q_ed_out) {
  NetworkState d;
  d.p_in = (s.q_l_in - (q_nom - q_ed_in)) / p.c_in;
  d.p_out = ((q_nom + q_ed_out) - s.q_l_out) / p.c_out;
  d.q_l_in = (p.p_res - s.p_in - p.r_in * s.q_l_in) / p.l_in;
  d.q_l_out = (s.p_out - p.p_res - p.r_out * s.q_l_out) / p.l_out;
  return d;
}

NetworkState dc_fixed_point(const NetworkParams& p, double q_nom) {
  NetworkState s;
  s.p_in = p.p_res - p.r_in * q_nom;
  s.p_out = p.p_res + p.r_out * q_nom;
  s.q_l_in = q_nom;
  s.q_l_out = q_nom;
  return s;
}

SimulationResult simulate(const NetworkParams& p, const PumpGeometry& g,
                          const PulseTrain& train, MotorSpeed speed,
                          std::optional<NetworkState> init) {
  validate_params(p);
  validate_geometry(g);
  if (!(train.h > 0.0) || train.q_ed_in.size() < 2 ||
      train.q_ed_in.size() != train.q_ed_out.size()) {
    fail(ErrorCode::InvalidArgument, "pulse train grid is unusable");
  }

  const double q_nom = nominal_flow(g, speed);
  const double h = train.h;
  const std::size_t n = train.q_ed_in.size();

  Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
  a(0, 2) = 1.0 / p.c_in;
  a(1, 3) = -1.0 / p.c_out;
  a(2, 0) = -1.0 / p.l_in;
  a(2, 2) = -p.r_in / p.l_in;
  a(3, 1) = 1.0 / p.l_out;
  a(3, 3) = -p.r_out / p.l_out;

  // trapezoidal step; the Newton matrix is constant so it is factored once
  const Eigen::Matrix4d m1 = Eigen::Matrix4d::Identity() - 0.5 * h * a;
  const Eigen::PartialPivLU<Eigen::Matrix4d> lu(m1);

  const auto forcing = [&](std::size_t k) {
    Eigen::Vector4d b;
    b(0) = -(q_nom - train.q_ed_in[k]) / p.c_in;
    b(1) = (q_nom - train.q_ed_out[k]) / p.c_out;
    b(2) = p.p_res / p.l_in;
    b(3) = -p.p_res / p.l_out;
    return b;
  };

  const NetworkState start = init ? *init : dc_fixed_point(p, q_nom);
  Eigen::Vector4d x(start.p_in, start.p_out, start.q_l_in, start.q_l_out);

  SimulationResult res;
  res.t.resize(n);
  res.p_in.resize(n);
  res.p_out.resize(n);
  res.q_l_in.resize(n);
  res.q_l_out.resize(n);
  res.q_in.resize(n);
  res.q_out.resize(n);
  res.diagnostics.steps = n - 1;
  res.diagnostics.max_newton_iterations = 0;

  const auto record = [&](std::size_t k) {
    res.t[k] = static_cast<double>(k) * h;
    res.p_in[k] = x(0);
    res.p_out[k] = x(1);
    res.q_l_in[k] = x(2);
    res.q_l_out[k] = x(3);
    res.q_in[k] = q_nom - train.q_ed_in[k];
    res.q_out[k] = q_nom - train.q_ed_out[k];
  };
  record(0);

  constexpr int kMaxNewton = 25;
  Eigen::Vector4d b_prev = forcing(0);
  for (std::size_t k = 1; k < n; ++k) {
    const Eigen::Vector4d b_next = forcing(k);
    const Eigen::Vector4d f_prev = a * x + b_prev;
    const Eigen::Vector4d x_prev = x;

    int it = 0;
    for (;; ++it) {
      const Eigen::Vector4d residual =
          x - x_prev - 0.5 * h * (f_prev + a * x + b_next);
      if (!x.allFinite() || !residual.allFinite()) {
        fail(ErrorCode::NonFiniteState,
             "state or derivative became non-finite at t=" +
                 std::to_string(static_cast<double>(k) * h));
      }
      const double tol =
          1e-10 * (1.0 + x.cwiseAbs().maxCoeff());
      if (residual.cwiseAbs().maxCoeff() <= tol) break;
      if (it == kMaxNewton) {
        fail(ErrorCode::SolverDivergence,
             "implicit step failed to converge at t=" +
                 std::to_string(static_cast<double>(k) * h));
      }
      x -= lu.solve(residual);
    }
    if (it > res.diagnostics.max_newton_iterations) {
      res.diagnostics.max_newton_iterations = it;
    }

    if (!x.allFinite()) {
      fail(ErrorCode::NonFiniteState,
           "state became non-finite at t=" +
               std::to_string(static_cast<double>(k) * h));
    }
    record(k);
    b_prev = b_next;
  }

  return res;
}

}  // namespace pumpsim
