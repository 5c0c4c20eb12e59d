#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "pumpsim/commands.hpp"
#include "pumpsim/errors.hpp"

namespace {

// CLI overrides applied on top of the loaded parameter file
struct Overrides {
  std::vector<double> speeds;
  std::vector<int> rollers;
  double duration = -1.0;
  double step = -1.0;
  std::string out_dir;
};

pumpsim::RunConfig load_with_overrides(const std::string& config_path,
                                       const Overrides& ov) {
  pumpsim::RunConfig cfg = pumpsim::load_config(config_path);
  if (!ov.speeds.empty()) cfg.sweep.speeds_rpm = ov.speeds;
  if (!ov.rollers.empty()) cfg.sweep.roller_counts = ov.rollers;
  if (ov.duration > 0.0) cfg.solver.t_sim = ov.duration;
  if (ov.step > 0.0) cfg.solver.h = ov.step;
  if (!ov.out_dir.empty()) cfg.paths.output_dir = ov.out_dir;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"roller pump pulsation model"};
  app.require_subcommand(1);

  std::string config_path = "configs/default.ini";
  Overrides ov;
  app.add_option("--config", config_path, "parameter file")
      ->capture_default_str();
  app.add_option("--speeds", ov.speeds, "override sweep speeds [rpm]");
  app.add_option("--rollers", ov.rollers, "override roller counts");
  app.add_option("--duration", ov.duration, "override simulated time [s]");
  app.add_option("--step", ov.step, "override solver step [s]");
  app.add_option("--out", ov.out_dir, "override output directory");

  CLI::App* c_simulate =
      app.add_subcommand("simulate", "run the sweep and write waveforms");
  CLI::App* c_compare =
      app.add_subcommand("compare", "score simulations against measured traces");
  CLI::App* c_volume =
      app.add_subcommand("volume-table", "per-rotation and 10-rotation volumes");

  CLI::App* c_fit =
      app.add_subcommand("fit-volume", "fit the roller displacement curve");
  std::string fit_csv;
  c_fit->add_option("--csv", fit_csv, "displacement samples (default: config)");

  CLI::App* c_calibrate =
      app.add_subcommand("calibrate", "derive network parameters from bench tests");
  pumpsim::CalibrateArgs cal;
  c_calibrate->add_option("--resistance", cal.resistance_csv,
                          "steady-flow test records");
  c_calibrate->add_option("--compliance", cal.compliance_csv,
                          "volume-injection test records");
  c_calibrate->add_option("--trace", cal.trace_csv,
                          "pressure trace for the inertance fit");
  c_calibrate->add_option("--trace-speed", cal.trace_speed_rpm,
                          "pump speed during the trace [rpm]")
      ->capture_default_str();
  c_calibrate->add_option("--l-start", cal.l_grid_start,
                          "first inertance candidate [kPa s2/ml]")
      ->capture_default_str();
  c_calibrate->add_option("--l-stop", cal.l_grid_stop,
                          "last inertance candidate [kPa s2/ml]")
      ->capture_default_str();
  c_calibrate->add_option("--l-step", cal.l_grid_step,
                          "candidate spacing [kPa s2/ml]")
      ->capture_default_str();
  c_calibrate->add_option("--metric", cal.metric, "p_in | p_out | both")
      ->capture_default_str();
  c_calibrate->add_option("--emit", cal.output_path,
                          "path for the calibrated parameter file");

  CLI::App* c_plot = app.add_subcommand("plot", "render CSV outputs as SVG");
  std::vector<std::string> plot_inputs;
  std::string plot_out = "out";
  c_plot->add_option("files", plot_inputs, "CSV files to render");
  c_plot->add_option("--out", plot_out, "output directory")
      ->capture_default_str();

  // global options may follow the subcommand name
  for (CLI::App* sub : {c_simulate, c_compare, c_volume, c_fit, c_calibrate,
                        c_plot}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_simulate->parsed()) {
      return pumpsim::cmd_simulate(load_with_overrides(config_path, ov),
                                   std::cout);
    }
    if (c_compare->parsed()) {
      return pumpsim::cmd_compare(load_with_overrides(config_path, ov),
                                  std::cout);
    }
    if (c_volume->parsed()) {
      return pumpsim::cmd_volume_table(load_with_overrides(config_path, ov),
                                       std::cout);
    }
    if (c_fit->parsed()) {
      // an explicit sample file needs no parameter file at all
      const pumpsim::RunConfig cfg =
          fit_csv.empty() ? load_with_overrides(config_path, ov)
                          : pumpsim::RunConfig{};
      return pumpsim::cmd_fit_volume(cfg, fit_csv, std::cout);
    }
    if (c_calibrate->parsed()) {
      return pumpsim::cmd_calibrate(load_with_overrides(config_path, ov), cal,
                                    std::cout);
    }
    if (c_plot->parsed()) {
      const std::string dir = !ov.out_dir.empty() ? ov.out_dir : plot_out;
      return pumpsim::cmd_plot(plot_inputs, dir, std::cout);
    }
  } catch (const pumpsim::Error& e) {
    // what() already carries "<Category>: <detail>"
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
