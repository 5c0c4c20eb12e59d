#pragma once

#include "pumpsim/units.hpp"

namespace pumpsim {

// Pump dimensional data, SI lengths and volumes. Angles stay in degrees:
// every angular relation in the model is stated against degree spans and
// converting them back and forth only invites mistakes.
struct PumpGeometry {
  double inner_tube_radius = 0.0;    // r_i [m]
  double outer_tube_radius = 0.0;    // r_o [m]
  double backplate_radius = 0.0;     // r_b [m]
  double roller_radius = 0.0;        // [m], documentation only
  double roller_offset_radius = 0.0; // [m], documentation only
  double contact_angle_deg = 0.0;    // beta, half the raceway span past 180
  int roller_count = 0;              // NU
  double max_roller_volume = 0.0;    // V_r [m3]
  double engagement_angle_deg = 0.0; // phi, first contact to full occlusion
};

class MotorSpeed {
 public:
  static MotorSpeed from_rpm(double rpm);
  static MotorSpeed from_rad_s(double omega);

  double omega() const { return omega_; }                          // [rad/s]
  double rpm() const { return units::rad_s_to_rpm(omega_); }
  double omega_deg() const { return units::rad_to_deg(omega_); }   // [deg/s]

 private:
  explicit MotorSpeed(double omega) : omega_(omega) {}
  double omega_ = 0.0;
};

// Throws InvalidGeometry when a structural invariant is broken.
void validate_geometry(const PumpGeometry& g);

// True when the engagement and disengagement arcs overlap (the raceway has
// less than phi + 2*beta of free span). Callers should warn; the formulas
// still evaluate.
bool engagement_overlaps(const PumpGeometry& g);

// Idealized flow with the tube treated as fully open: pi ri^2 w (rb - ro).
double nominal_flow(const PumpGeometry& g, MotorSpeed speed);       // [m3/s]

// Volume moved per revolution if no roller ever occupied the tube.
double nominal_volume_per_rotation(const PumpGeometry& g);          // [m3]

// Net volume per revolution after subtracting the roller-occupied volume.
// Throws NonphysicalGeometry when the rollers displace more than the tube
// holds.
double volume_per_rotation(const PumpGeometry& g);                  // [m3]

double average_flow(const PumpGeometry& g, MotorSpeed speed);       // [m3/s]

}  // namespace pumpsim
