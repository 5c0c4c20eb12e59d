#pragma once

#include <random>
#include <string>

#include "pumpsim/csv.hpp"
#include "pumpsim/displacement.hpp"
#include "pumpsim/geometry.hpp"
#include "pumpsim/network.hpp"
#include "pumpsim/units.hpp"

namespace testsupport {

// the bench pump every numeric example in the tests refers to
inline pumpsim::PumpGeometry bench_pump() {
  pumpsim::PumpGeometry g;
  g.inner_tube_radius = pumpsim::units::mm_to_m(5.0);
  g.outer_tube_radius = pumpsim::units::mm_to_m(7.0);
  g.backplate_radius = pumpsim::units::mm_to_m(63.0);
  g.roller_radius = pumpsim::units::mm_to_m(20.0);
  g.roller_offset_radius = pumpsim::units::mm_to_m(40.0);
  g.contact_angle_deg = 30.0;
  g.roller_count = 3;
  g.max_roller_volume = pumpsim::units::ml_to_m3(2.06);
  g.engagement_angle_deg = 50.53;
  return g;
}

inline pumpsim::NetworkParams bench_network() {
  pumpsim::NetworkParams p;
  p.p_res = pumpsim::units::kpa_to_pa(88.637);
  p.r_in = pumpsim::units::kpa_s_per_ml_to_si(0.1108);
  p.r_out = p.r_in;
  p.c_in = pumpsim::units::ml_per_kpa_to_si(0.0361);
  p.c_out = p.c_in;
  p.l_in = pumpsim::units::kpa_s2_per_ml_to_si(0.0042);
  p.l_out = p.l_in;
  return p;
}

inline std::string data_path(const std::string& name) {
  return std::string(PUMPSIM_DATA_DIR) + "/" + name;
}

inline pumpsim::RollerDisplacementCurve bench_curve() {
  return pumpsim::fit_displacement(
      pumpsim::load_displacement_csv(data_path("reference_rvd.csv")));
}

// geometry with all invariants satisfied and positive net volume
inline pumpsim::PumpGeometry random_geometry(std::mt19937_64& rng) {
  using pumpsim::units::ml_to_m3;
  using pumpsim::units::mm_to_m;
  std::uniform_real_distribution<double> u(0.0, 1.0);

  pumpsim::PumpGeometry g;
  g.inner_tube_radius = mm_to_m(1.0 + 9.0 * u(rng));
  g.outer_tube_radius = g.inner_tube_radius + mm_to_m(0.5 + 4.0 * u(rng));
  g.backplate_radius = g.outer_tube_radius + mm_to_m(20.0 + 60.0 * u(rng));
  g.roller_radius = mm_to_m(5.0 + 20.0 * u(rng));
  g.roller_offset_radius = g.backplate_radius * (0.4 + 0.5 * u(rng));
  g.contact_angle_deg = 60.0 * u(rng);
  g.roller_count = 2 + static_cast<int>(4.0 * u(rng));
  g.engagement_angle_deg = 10.0 + 110.0 * u(rng);

  const double v_nom = pumpsim::nominal_volume_per_rotation(g);
  g.max_roller_volume =
      v_nom / (2.0 * g.roller_count) * (0.2 + 0.7 * u(rng));
  return g;
}

}  // namespace testsupport
