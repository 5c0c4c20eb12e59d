#include "pumpsim/geometry.hpp"

#include <cmath>
#include <string>

#include "pumpsim/errors.hpp"

namespace pumpsim {

MotorSpeed MotorSpeed::from_rpm(double rpm) {
  return from_rad_s(units::rpm_to_rad_s(rpm));
}

MotorSpeed MotorSpeed::from_rad_s(double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    fail(ErrorCode::InvalidArgument,
         "motor speed must be finite and non-negative, got " +
             std::to_string(omega));
  }
  return MotorSpeed(omega);
}

void validate_geometry(const PumpGeometry& g) {
  const auto reject = [](const std::string& what) {
    fail(ErrorCode::InvalidGeometry, what);
  };
  if (!(g.inner_tube_radius > 0.0)) reject("inner tube radius must be > 0");
  if (!(g.inner_tube_radius < g.outer_tube_radius)) {
    reject("inner tube radius must be smaller than the outer radius");
  }
  if (!(g.outer_tube_radius < g.backplate_radius)) {
    reject("outer tube radius must be smaller than the backplate radius");
  }
  if (!(g.roller_offset_radius < g.backplate_radius)) {
    reject("roller offset radius must stay inside the backplate");
  }
  if (g.roller_count < 2) {
    reject("at least two rollers are required so one always engages");
  }
  if (!(g.contact_angle_deg >= 0.0 && g.contact_angle_deg < 90.0)) {
    reject("contact angle must lie in [0, 90) degrees");
  }
  if (!(g.engagement_angle_deg > 0.0 && g.engagement_angle_deg < 180.0)) {
    reject("engagement angle must lie in (0, 180) degrees");
  }
  if (!(g.max_roller_volume > 0.0)) reject("max roller volume must be > 0");
}

bool engagement_overlaps(const PumpGeometry& g) {
  return 180.0 - g.engagement_angle_deg - 2.0 * g.contact_angle_deg < 0.0;
}

double nominal_flow(const PumpGeometry& g, MotorSpeed speed) {
  const double ri = g.inner_tube_radius;
  return units::pi * ri * ri * speed.omega() *
         (g.backplate_radius - g.outer_tube_radius);
}

double nominal_volume_per_rotation(const PumpGeometry& g) {
  const double ri = g.inner_tube_radius;
  return 2.0 * units::pi * (g.backplate_radius - g.outer_tube_radius) *
         units::pi * ri * ri;
}

double volume_per_rotation(const PumpGeometry& g) {
  const double v = nominal_volume_per_rotation(g) -
                   g.max_roller_volume * static_cast<double>(g.roller_count);
  if (!(v > 0.0)) {
    fail(ErrorCode::NonphysicalGeometry,
         "rollers displace at least the whole nominal volume per rotation");
  }
  return v;
}

double average_flow(const PumpGeometry& g, MotorSpeed speed) {
  return volume_per_rotation(g) * speed.omega() / (2.0 * units::pi);
}

}  // namespace pumpsim
