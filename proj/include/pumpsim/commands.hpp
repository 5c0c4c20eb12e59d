#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pumpsim/config.hpp"

// CLI entry points. Each returns a process exit code and reports through the
// given stream; hard failures propagate as Error for main() to format.
namespace pumpsim {

struct CalibrateArgs {
  std::string resistance_csv;  // optional
  std::string compliance_csv;  // optional
  std::string trace_csv;       // optional, enables the inertance fit
  double trace_speed_rpm = 100.0;
  double l_grid_start = 0.001;  // [kPa s2/mL]
  double l_grid_stop = 0.010;
  double l_grid_step = 0.0005;
  std::string metric = "p_in";  // p_in | p_out | both
  std::string output_path;      // emitted parameter file
};

int cmd_simulate(const RunConfig& cfg, std::ostream& out);
int cmd_compare(const RunConfig& cfg, std::ostream& out);
int cmd_volume_table(const RunConfig& cfg, std::ostream& out);
int cmd_fit_volume(const RunConfig& cfg, const std::string& csv_path,
                   std::ostream& out);
int cmd_calibrate(const RunConfig& cfg, const CalibrateArgs& args,
                  std::ostream& out);
int cmd_plot(const std::vector<std::string>& csv_paths,
             const std::string& out_dir, std::ostream& out);

}  // namespace pumpsim
