#pragma once

#include <array>
#include <vector>

#include "pumpsim/geometry.hpp"

namespace pumpsim {

struct DisplacementSample {
  double angle_deg = 0.0;  // relative to first light contact
  double volume = 0.0;     // displaced volume [m3]
};

// Degree-5 least-squares fit of the measured roller volume displacement.
// The polynomial maps angle [deg] to volume [m3]; its support runs from 0 to
// the angle where the fitted volume peaks (full occlusion).
class RollerDisplacementCurve {
 public:
  const std::vector<DisplacementSample>& samples() const { return samples_; }
  const std::array<double, 6>& coefficients() const { return coeffs_; }
  double support_end_deg() const { return support_end_deg_; }
  double v_max() const { return v_max_; }

  double volume_at(double theta_deg) const;
  double dv_dtheta(double theta_deg) const;  // [m3/deg]

 private:
  friend RollerDisplacementCurve fit_displacement(
      std::vector<DisplacementSample> samples);

  std::vector<DisplacementSample> samples_;
  std::array<double, 6> coeffs_{};
  double support_end_deg_ = 0.0;
  double v_max_ = 0.0;
};

// Averages repeated runs per angle, then fits. Throws InsufficientSamples
// with fewer than 7 distinct angles and NonMonotoneData when the fitted
// volume dips more than 5% of V_max inside the support.
RollerDisplacementCurve fit_displacement(std::vector<DisplacementSample> samples);

// Time a single engagement takes at the given speed [s].
double pulse_duration(const RollerDisplacementCurve& curve, MotorSpeed speed);

// One engagement flow pulse sampled at k*h: omega * dV/dtheta along the
// support, with samples opposing the pulse direction clamped to zero.
// Throws InvalidStep when h exceeds a tenth of the pulse duration.
std::vector<double> pulse_shape(const RollerDisplacementCurve& curve,
                                MotorSpeed speed, double h);

}  // namespace pumpsim
