#pragma once

#include <numbers>

// The library core works in strict SI (m, s, Pa, m3). Everything the user
// touches (config keys, CSV columns, reports) uses bench units instead, so
// all conversions are concentrated here.
namespace pumpsim::units {

inline constexpr double pi = std::numbers::pi;

constexpr double mm_to_m(double v) { return v * 1e-3; }
constexpr double m_to_mm(double v) { return v * 1e3; }
constexpr double ml_to_m3(double v) { return v * 1e-6; }
constexpr double m3_to_ml(double v) { return v * 1e6; }
constexpr double kpa_to_pa(double v) { return v * 1e3; }
constexpr double pa_to_kpa(double v) { return v * 1e-3; }
constexpr double rpm_to_rad_s(double v) { return v * 2.0 * pi / 60.0; }
constexpr double rad_s_to_rpm(double v) { return v * 60.0 / (2.0 * pi); }
constexpr double deg_to_rad(double v) { return v * pi / 180.0; }
constexpr double rad_to_deg(double v) { return v * 180.0 / pi; }

// composite units used by the network parameter file
constexpr double kpa_s_per_ml_to_si(double v) { return v * 1e9; }
constexpr double si_to_kpa_s_per_ml(double v) { return v * 1e-9; }
constexpr double ml_per_kpa_to_si(double v) { return v * 1e-9; }
constexpr double si_to_ml_per_kpa(double v) { return v * 1e9; }
constexpr double kpa_s2_per_ml_to_si(double v) { return v * 1e9; }
constexpr double si_to_kpa_s2_per_ml(double v) { return v * 1e-9; }
constexpr double ml_s_to_m3_s(double v) { return v * 1e-6; }
constexpr double m3_s_to_ml_s(double v) { return v * 1e6; }

}  // namespace pumpsim::units
