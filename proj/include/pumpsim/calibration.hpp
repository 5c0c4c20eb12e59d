#pragma once

#include <vector>

#include "pumpsim/displacement.hpp"
#include "pumpsim/geometry.hpp"
#include "pumpsim/network.hpp"

namespace pumpsim {

// One steady-flow bench run: mass displaced over a timed window against a
// measured pressure drop.
struct ResistanceTestRecord {
  double delta_p = 0.0;         // [Pa]
  double displaced_mass = 0.0;  // [kg]
  double duration = 0.0;        // [s]
  double water_density = 0.0;   // [kg/m3]
};

// One injection test: known volume pushed into a sealed line section.
struct ComplianceTestRecord {
  double delta_p = 0.0;          // pressure rise [Pa]
  double injected_volume = 0.0;  // [m3]
  double total_volume = 0.0;     // line volume [m3]
};

// Kell-type fit, valid over roughly 0..60 C; 997.05 kg/m3 at 25 C.
double water_density_kg_m3(double temp_c);

// delta_p / Q with Q = (m / rho) / t. Throws ZeroFlow when the displaced
// volume per second vanishes.
double resistance_from_test(const ResistanceTestRecord& rec);  // [Pa s/m3]

// Inverse effective bulk modulus. The bench convention reads the volume
// ratio per kPa as a compliance in mL/kPa, so the SI result is
// (dV/V_total)/dP_kPa scaled by 1e-9.
double compliance_from_test(const ComplianceTestRecord& rec);  // [m3/Pa]

struct PressureTrace {
  std::vector<double> t;      // [s]
  std::vector<double> p_in;   // [Pa]
  std::vector<double> p_out;  // [Pa]
};

enum class FitMetric { PIn, POut, Both };

struct InertanceFit {
  double inertance = 0.0;       // argmin [Pa s2/m3]
  double rmse = 0.0;            // score at the argmin [Pa]
  std::vector<double> grid;     // candidates, ascending
  std::vector<double> scores;   // RMSE per candidate [Pa]
  bool converged = false;       // false when the argmin sits on a grid edge
};

// Grid search: simulates each candidate inertance (applied to both lines),
// scores RMSE against the trace at periodic steady state (warm-up skipped),
// returns the argmin with ties broken toward smaller values. The trace must
// be sampled at 1 kHz or faster.
InertanceFit fit_inertance(const PressureTrace& trace, NetworkParams params,
                           const PumpGeometry& g,
                           const RollerDisplacementCurve& curve,
                           MotorSpeed speed, const std::vector<double>& l_grid,
                           double h = 1e-3, double warmup_revolutions = 2.0,
                           FitMetric metric = FitMetric::PIn);

}  // namespace pumpsim
