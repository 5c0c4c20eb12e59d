#pragma once

#include <string>
#include <vector>

#include "pumpsim/geometry.hpp"
#include "pumpsim/network.hpp"

namespace pumpsim {

struct SolverConfig {
  double h = 1e-3;          // [s]
  double t_sim = 10.0;      // [s]
  double warmup_revolutions = 2.0;
  std::string init = "auto";  // "auto" (DC fixed point) or "reservoir"
};

struct SweepConfig {
  std::vector<double> speeds_rpm;
  std::vector<int> roller_counts;
};

struct PathsConfig {
  std::string rvd_csv;
  std::string output_dir;
  std::string experimental_trace_dir;  // optional
  std::string measured_volumes_csv;    // optional
};

struct RunConfig {
  PumpGeometry geometry;  // SI; engagement angle only valid when not auto
  bool engagement_angle_auto = true;
  NetworkParams network;  // SI
  SolverConfig solver;
  SweepConfig sweep;
  PathsConfig paths;
  std::string nrmse_normalizer = "mean";  // "mean" or "range"
  std::string config_dir;  // directory of the loaded file, for relative paths
};

// Parses the sectioned key-value format. Keys carry their unit as a suffix
// (_mm, _deg, _ml, _kpa, _rpm, _s and the composite network units); unknown
// or missing keys raise ConfigError naming file and key, as does a missing
// referenced input file.
RunConfig load_config(const std::string& path);

std::string serialize_config(const RunConfig& c);
void save_config(const RunConfig& c, const std::string& path);

// Resolves a possibly relative path against the config's directory.
std::string resolve_config_path(const RunConfig& c, const std::string& path);

}  // namespace pumpsim
