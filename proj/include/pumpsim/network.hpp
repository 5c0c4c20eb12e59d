#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pumpsim/geometry.hpp"
#include "pumpsim/pulse_train.hpp"

namespace pumpsim {

// Electrical-analogue line parameters, one resistance/compliance/inertance
// per line plus the shared reservoir pressure.
struct NetworkParams {
  double p_res = 0.0;  // [Pa], absolute
  double r_in = 0.0;   // [Pa s/m3]
  double r_out = 0.0;
  double c_in = 0.0;   // [m3/Pa]
  double c_out = 0.0;
  double l_in = 0.0;   // [Pa s2/m3]
  double l_out = 0.0;
};

struct NetworkState {
  double p_in = 0.0;     // [Pa]
  double p_out = 0.0;    // [Pa]
  double q_l_in = 0.0;   // line flow [m3/s]
  double q_l_out = 0.0;  // line flow [m3/s]
};

struct SolverDiagnostics {
  std::size_t steps = 0;
  int max_newton_iterations = 0;
};

struct SimulationResult {
  std::vector<double> t;
  std::vector<double> p_in, p_out, q_l_in, q_l_out;
  std::vector<double> q_in, q_out;  // applied source flows [m3/s]
  SolverDiagnostics diagnostics;
};

void validate_params(const NetworkParams& p);

// Right-hand side of the four coupled line equations. q_ed_in enters with
// positive sign (an engaging roller pushes back toward the inlet) and
// q_ed_out is expected <= 0 (a disengaging roller swallows delivery):
//   dP_in/dt   = (Q_L_in - (q_nom - q_ed_in)) / C_in
//   dP_out/dt  = ((q_nom + q_ed_out) - Q_L_out) / C_out
//   dQ_L_in/dt = (P_res - P_in - R_in Q_L_in) / L_in
//   dQ_L_out/dt= (P_out - P_res - R_out Q_L_out) / L_out
NetworkState derivatives(const NetworkState& s, const NetworkParams& p,
                         double q_nom, double q_ed_in, double q_ed_out);

// Equilibrium under constant q_nom with no pulses.
NetworkState dc_fixed_point(const NetworkParams& p, double q_nom);

// Integrates the network over the train's grid with the implicit trapezoidal
// rule (A-stable; one 4x4 Newton solve per step against a constant factored
// matrix). init = nullopt starts at the DC fixed point. Throws
// SolverDivergence or NonFiniteState on failure.
SimulationResult simulate(const NetworkParams& p, const PumpGeometry& g,
                          const PulseTrain& train, MotorSpeed speed,
                          std::optional<NetworkState> init = std::nullopt);

}  // namespace pumpsim
