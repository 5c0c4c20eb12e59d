#include "pumpsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "pumpsim/errors.hpp"
#include "pumpsim/units.hpp"

namespace pumpsim {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool file_exists(const std::string& path) {
  std::ifstream in(path);
  return static_cast<bool>(in);
}

struct RawConfig {
  std::string path;
  // flat map keyed "section.key"
  std::map<std::string, std::string> values;
  std::set<std::string> consumed;

  const std::string& get(const std::string& key) {
    const auto it = values.find(key);
    if (it == values.end()) {
      fail(ErrorCode::ConfigError, path + ": missing key '" + key + "'");
    }
    consumed.insert(key);
    return it->second;
  }

  std::string get_or(const std::string& key, const std::string& fallback) {
    const auto it = values.find(key);
    if (it == values.end()) return fallback;
    consumed.insert(key);
    return it->second;
  }

  double number(const std::string& key) {
    const std::string& text = get(key);
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *trim(end).c_str() != '\0' || !std::isfinite(v)) {
      fail(ErrorCode::ConfigError,
           path + ": key '" + key + "' is not a number: '" + text + "'");
    }
    return v;
  }

  void check_all_consumed() const {
    for (const auto& [key, value] : values) {
      if (!consumed.count(key)) {
        fail(ErrorCode::ConfigError, path + ": unknown key '" + key + "'");
      }
    }
  }
};

RawConfig parse_ini(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorCode::ConfigError, "cannot open config: " + path);
  }

  RawConfig raw;
  raw.path = path;
  std::string line;
  std::string section;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#' || stripped[0] == ';') continue;

    if (stripped.front() == '[') {
      if (stripped.back() != ']' || stripped.size() < 3) {
        fail(ErrorCode::ConfigError,
             path + ":" + std::to_string(line_no) + ": malformed section header");
      }
      section = trim(stripped.substr(1, stripped.size() - 2));
      continue;
    }

    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos || section.empty()) {
      fail(ErrorCode::ConfigError,
           path + ":" + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = section + "." + trim(stripped.substr(0, eq));
    if (raw.values.count(key)) {
      fail(ErrorCode::ConfigError, path + ": duplicate key '" + key + "'");
    }
    raw.values[key] = trim(stripped.substr(eq + 1));
  }
  return raw;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(text);
  while (std::getline(ss, cur, ',')) {
    const std::string t = trim(cur);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

std::string dirname_of(const std::string& path) {
  const std::size_t slash = path.find_last_of('/');
  if (slash == std::string::npos) return ".";
  if (slash == 0) return "/";
  return path.substr(0, slash);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string resolve_config_path(const RunConfig& c, const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  if (c.config_dir.empty()) return path;
  return c.config_dir + "/" + path;
}

RunConfig load_config(const std::string& path) {
  RawConfig raw = parse_ini(path);
  RunConfig c;
  c.config_dir = dirname_of(path);

  c.geometry.inner_tube_radius =
      units::mm_to_m(raw.number("geometry.inner_tube_radius_mm"));
  c.geometry.outer_tube_radius =
      units::mm_to_m(raw.number("geometry.outer_tube_radius_mm"));
  c.geometry.backplate_radius =
      units::mm_to_m(raw.number("geometry.backplate_radius_mm"));
  c.geometry.roller_radius =
      units::mm_to_m(raw.number("geometry.roller_radius_mm"));
  c.geometry.roller_offset_radius =
      units::mm_to_m(raw.number("geometry.roller_offset_radius_mm"));
  c.geometry.contact_angle_deg = raw.number("geometry.contact_angle_deg");
  const double rollers = raw.number("geometry.roller_count");
  if (rollers != std::floor(rollers) || rollers < 1.0 || rollers > 64.0) {
    fail(ErrorCode::ConfigError,
         path + ": key 'geometry.roller_count' must be a small integer");
  }
  c.geometry.roller_count = static_cast<int>(rollers);
  c.geometry.max_roller_volume =
      units::ml_to_m3(raw.number("geometry.max_roller_volume_ml"));

  const std::string phi = raw.get("geometry.engagement_angle_deg");
  if (phi == "auto") {
    c.engagement_angle_auto = true;
    c.geometry.engagement_angle_deg = 0.0;
  } else {
    c.engagement_angle_auto = false;
    raw.consumed.erase("geometry.engagement_angle_deg");
    c.geometry.engagement_angle_deg =
        raw.number("geometry.engagement_angle_deg");
  }

  c.network.p_res = units::kpa_to_pa(raw.number("network.reservoir_pressure_kpa"));
  c.network.r_in = units::kpa_s_per_ml_to_si(
      raw.number("network.inlet_resistance_kpa_s_per_ml"));
  c.network.r_out = units::kpa_s_per_ml_to_si(
      raw.number("network.outlet_resistance_kpa_s_per_ml"));
  c.network.c_in = units::ml_per_kpa_to_si(
      raw.number("network.inlet_compliance_ml_per_kpa"));
  c.network.c_out = units::ml_per_kpa_to_si(
      raw.number("network.outlet_compliance_ml_per_kpa"));
  c.network.l_in = units::kpa_s2_per_ml_to_si(
      raw.number("network.inlet_inertance_kpa_s2_per_ml"));
  c.network.l_out = units::kpa_s2_per_ml_to_si(
      raw.number("network.outlet_inertance_kpa_s2_per_ml"));

  c.solver.h = raw.number("solver.step_s");
  c.solver.t_sim = raw.number("solver.duration_s");
  c.solver.warmup_revolutions = raw.number("solver.warmup_revolutions");
  c.solver.init = raw.get("solver.init");
  if (c.solver.init != "auto" && c.solver.init != "reservoir") {
    fail(ErrorCode::ConfigError,
         path + ": key 'solver.init' must be 'auto' or 'reservoir'");
  }
  if (!(c.solver.h > 0.0) || !(c.solver.t_sim > 0.0) ||
      !(c.solver.warmup_revolutions >= 0.0)) {
    fail(ErrorCode::ConfigError,
         path + ": solver step, duration, and warmup must be positive");
  }

  for (const std::string& s : split_list(raw.get("sweep.speeds_rpm"))) {
    const double v = std::strtod(s.c_str(), nullptr);
    if (!(v > 0.0)) {
      fail(ErrorCode::ConfigError,
           path + ": key 'sweep.speeds_rpm' has a non-positive entry");
    }
    c.sweep.speeds_rpm.push_back(v);
  }
  for (const std::string& s : split_list(raw.get("sweep.roller_counts"))) {
    const long v = std::strtol(s.c_str(), nullptr, 10);
    if (v < 2 || v > 64) {
      fail(ErrorCode::ConfigError,
           path + ": key 'sweep.roller_counts' entries must be integers >= 2");
    }
    c.sweep.roller_counts.push_back(static_cast<int>(v));
  }

  c.nrmse_normalizer = raw.get_or("analysis.nrmse_normalizer", "mean");
  if (c.nrmse_normalizer != "mean" && c.nrmse_normalizer != "range") {
    fail(ErrorCode::ConfigError,
         path + ": key 'analysis.nrmse_normalizer' must be 'mean' or 'range'");
  }

  c.paths.rvd_csv = raw.get("paths.rvd_csv");
  c.paths.output_dir = raw.get_or("paths.output_dir", "out");
  c.paths.experimental_trace_dir =
      raw.get_or("paths.experimental_trace_dir", "");
  c.paths.measured_volumes_csv = raw.get_or("paths.measured_volumes_csv", "");

  raw.check_all_consumed();

  if (c.paths.rvd_csv.empty() ||
      !file_exists(resolve_config_path(c, c.paths.rvd_csv))) {
    fail(ErrorCode::ConfigError,
         path + ": key 'paths.rvd_csv' does not point to a readable file: '" +
             c.paths.rvd_csv + "'");
  }
  if (!c.paths.measured_volumes_csv.empty() &&
      !file_exists(resolve_config_path(c, c.paths.measured_volumes_csv))) {
    fail(ErrorCode::ConfigError,
         path + ": key 'paths.measured_volumes_csv' does not point to a readable file");
  }

  return c;
}

std::string serialize_config(const RunConfig& c) {
  std::string out;
  out += "[geometry]\n";
  out += "inner_tube_radius_mm = " + fmt(units::m_to_mm(c.geometry.inner_tube_radius)) + "\n";
  out += "outer_tube_radius_mm = " + fmt(units::m_to_mm(c.geometry.outer_tube_radius)) + "\n";
  out += "backplate_radius_mm = " + fmt(units::m_to_mm(c.geometry.backplate_radius)) + "\n";
  out += "roller_radius_mm = " + fmt(units::m_to_mm(c.geometry.roller_radius)) + "\n";
  out += "roller_offset_radius_mm = " + fmt(units::m_to_mm(c.geometry.roller_offset_radius)) + "\n";
  out += "contact_angle_deg = " + fmt(c.geometry.contact_angle_deg) + "\n";
  out += "roller_count = " + std::to_string(c.geometry.roller_count) + "\n";
  out += "max_roller_volume_ml = " + fmt(units::m3_to_ml(c.geometry.max_roller_volume)) + "\n";
  out += "engagement_angle_deg = ";
  out += c.engagement_angle_auto ? "auto" : fmt(c.geometry.engagement_angle_deg);
  out += "\n\n";

  out += "[network]\n";
  out += "reservoir_pressure_kpa = " + fmt(units::pa_to_kpa(c.network.p_res)) + "\n";
  out += "inlet_resistance_kpa_s_per_ml = " + fmt(units::si_to_kpa_s_per_ml(c.network.r_in)) + "\n";
  out += "outlet_resistance_kpa_s_per_ml = " + fmt(units::si_to_kpa_s_per_ml(c.network.r_out)) + "\n";
  out += "inlet_compliance_ml_per_kpa = " + fmt(units::si_to_ml_per_kpa(c.network.c_in)) + "\n";
  out += "outlet_compliance_ml_per_kpa = " + fmt(units::si_to_ml_per_kpa(c.network.c_out)) + "\n";
  out += "inlet_inertance_kpa_s2_per_ml = " + fmt(units::si_to_kpa_s2_per_ml(c.network.l_in)) + "\n";
  out += "outlet_inertance_kpa_s2_per_ml = " + fmt(units::si_to_kpa_s2_per_ml(c.network.l_out)) + "\n\n";

  out += "[solver]\n";
  out += "step_s = " + fmt(c.solver.h) + "\n";
  out += "duration_s = " + fmt(c.solver.t_sim) + "\n";
  out += "warmup_revolutions = " + fmt(c.solver.warmup_revolutions) + "\n";
  out += "init = " + c.solver.init + "\n\n";

  out += "[sweep]\n";
  out += "speeds_rpm = ";
  for (std::size_t i = 0; i < c.sweep.speeds_rpm.size(); ++i) {
    if (i) out += ",";
    out += fmt(c.sweep.speeds_rpm[i]);
  }
  out += "\nroller_counts = ";
  for (std::size_t i = 0; i < c.sweep.roller_counts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c.sweep.roller_counts[i]);
  }
  out += "\n\n";

  out += "[analysis]\n";
  out += "nrmse_normalizer = " + c.nrmse_normalizer + "\n\n";

  out += "[paths]\n";
  out += "rvd_csv = " + c.paths.rvd_csv + "\n";
  out += "output_dir = " + c.paths.output_dir + "\n";
  out += "experimental_trace_dir = " + c.paths.experimental_trace_dir + "\n";
  out += "measured_volumes_csv = " + c.paths.measured_volumes_csv + "\n";
  return out;
}

void save_config(const RunConfig& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(ErrorCode::IoError, "cannot open for writing: " + path);
  }
  out << serialize_config(c);
  if (!out) {
    fail(ErrorCode::IoError, "write failed: " + path);
  }
}

}  // namespace pumpsim
