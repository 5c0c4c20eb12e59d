#include "pumpsim/pulse_train.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pumpsim/errors.hpp"
#include "pumpsim/units.hpp"

namespace pumpsim {

double pulse_period(const PumpGeometry& g, MotorSpeed speed) {
  if (!(speed.omega() > 0.0)) {
    fail(ErrorCode::InvalidArgument, "pulse period needs a positive speed");
  }
  return 2.0 * units::pi / (static_cast<double>(g.roller_count) * speed.omega());
}

double separation_period(const PumpGeometry& g, MotorSpeed speed) {
  if (!(speed.omega() > 0.0)) {
    fail(ErrorCode::InvalidArgument, "separation period needs a positive speed");
  }
  const double free_angle_deg =
      180.0 - g.engagement_angle_deg - 2.0 * g.contact_angle_deg;
  return units::pi * free_angle_deg / (180.0 * speed.omega());
}

namespace {

// stamps one pulse copy starting at continuous time t; samples that fall
// before the grid or past its end are clipped
void add_pulse(std::vector<double>& line, const std::vector<double>& pulse,
               double t, double h) {
  const long long s = std::llround(t / h);
  const long long n = static_cast<long long>(line.size());
  const long long from = s < 0 ? -s : 0;
  for (long long k = from; k < static_cast<long long>(pulse.size()); ++k) {
    const long long idx = s + k;
    if (idx >= n) break;
    line[static_cast<std::size_t>(idx)] += pulse[static_cast<std::size_t>(k)];
  }
}

}  // namespace

PulseTrain build_train(const RollerDisplacementCurve& curve,
                       const PumpGeometry& g, MotorSpeed speed, double h,
                       double t_sim) {
  validate_geometry(g);
  if (!(h > 0.0) || !(t_sim > 0.0)) {
    fail(ErrorCode::InvalidArgument, "train grid needs positive h and t_sim");
  }

  PulseTrain train;
  train.h = h;
  train.t_sim = t_sim;
  train.t1 = pulse_period(g, speed);
  train.t2 = train.t1;
  train.t3 = separation_period(g, speed);

  const std::size_t n =
      static_cast<std::size_t>(std::ceil(t_sim / h)) + 1;
  train.q_ed_in.assign(n, 0.0);
  train.q_ed_out.assign(n, 0.0);

  // a degenerate curve displaces nothing; the train is legitimately flat
  if (!(curve.v_max() > 0.0)) return train;

  // the slack keeps an exactly-two-period window from tripping on roundoff
  if (t_sim < 2.0 * train.t1 * (1.0 - 1e-12)) {
    fail(ErrorCode::InvalidArgument,
         "simulated time must cover at least two pulse periods");
  }
  const double duration = pulse_duration(curve, speed);
  if (h > std::min(train.t1, duration) / 10.0) {
    fail(ErrorCode::GridTooCoarse,
         "step " + std::to_string(h) +
             " s cannot resolve the pulse and its period");
  }

  const std::vector<double> inlet_pulse = pulse_shape(curve, speed, h);
  std::vector<double> outlet_pulse(inlet_pulse.rbegin(), inlet_pulse.rend());

  // roller disengagements unload the outlet line starting at multiples of the
  // pulse period; engagements hit the inlet one separation period later
  const double cutoff = t_sim - 1e-15;
  for (double t = 0.0; t < cutoff; t += train.t2) {
    add_pulse(train.q_ed_out, outlet_pulse, t, h);
    const long long s = std::llround(t / h);
    if (s >= 0) train.outlet_start_indices.push_back(static_cast<std::size_t>(s));
  }
  for (double t = train.t3; t < cutoff; t += train.t1) {
    add_pulse(train.q_ed_in, inlet_pulse, t, h);
    const long long s = std::llround(t / h);
    if (s >= 0) train.inlet_start_indices.push_back(static_cast<std::size_t>(s));
  }

  return train;
}

}  // namespace pumpsim
