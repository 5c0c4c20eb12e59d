#pragma once

#include <cstddef>
#include <vector>

#include "pumpsim/displacement.hpp"
#include "pumpsim/geometry.hpp"

namespace pumpsim {

// Roller-induced flow magnitudes on the simulation grid. Both vectors hold
// non-negative values; the network equations apply the signs (an engagement
// pulse steals from intake, a disengagement pulse steals from delivery).
struct PulseTrain {
  double h = 0.0;      // grid step [s]
  double t_sim = 0.0;  // covered duration [s]
  std::vector<double> q_ed_in;   // engagement magnitudes [m3/s]
  std::vector<double> q_ed_out;  // disengagement magnitudes [m3/s]
  double t1 = 0.0;  // period between engagement pulse starts [s]
  double t2 = 0.0;  // period between disengagement pulse starts [s]
  double t3 = 0.0;  // lead of the first engagement behind t=0 [s]
  std::vector<std::size_t> inlet_start_indices;
  std::vector<std::size_t> outlet_start_indices;
};

// Time between successive pulses on one line: one rotation over NU rollers.
double pulse_period(const PumpGeometry& g, MotorSpeed speed);      // T1 == T2

// Delay from a roller starting to disengage (t = 0 convention) until the
// next roller starts to engage. Negative when the arcs overlap; see
// engagement_overlaps for the warning predicate.
double separation_period(const PumpGeometry& g, MotorSpeed speed);

// Places pulse copies for every roller passage in [0, t_sim). Start times
// are rounded to the nearest grid index; overlapping pulses add. Throws
// GridTooCoarse when h exceeds a tenth of min(T1, pulse duration) and
// InvalidArgument when t_sim spans fewer than two pulse periods.
PulseTrain build_train(const RollerDisplacementCurve& curve,
                       const PumpGeometry& g, MotorSpeed speed, double h,
                       double t_sim);

}  // namespace pumpsim
