#include "pumpsim/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>

#include "pumpsim/analysis.hpp"
#include "pumpsim/calibration.hpp"
#include "pumpsim/csv.hpp"
#include "pumpsim/errors.hpp"
#include "pumpsim/kernels.hpp"
#include "pumpsim/network.hpp"
#include "pumpsim/plot.hpp"
#include "pumpsim/pulse_train.hpp"
#include "pumpsim/units.hpp"

namespace pumpsim {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string speed_tag(double rpm) { return fmt("%g", rpm); }

void ensure_dir(const std::string& path) {
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec) {
    fail(ErrorCode::IoError, "cannot create directory: " + path);
  }
}

bool file_exists(const std::string& path) {
  std::ifstream in(path);
  return static_cast<bool>(in);
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

struct ResolvedPump {
  PumpGeometry geometry;
  RollerDisplacementCurve curve;
};

// loads the displacement data, fits the curve, and fills the engagement
// angle from the fitted support when the config left it on auto
ResolvedPump resolve_pump(const RunConfig& cfg) {
  const std::string rvd = resolve_config_path(cfg, cfg.paths.rvd_csv);
  ResolvedPump pump{cfg.geometry, fit_displacement(load_displacement_csv(rvd))};
  if (cfg.engagement_angle_auto) {
    pump.geometry.engagement_angle_deg = pump.curve.support_end_deg();
  }
  validate_geometry(pump.geometry);
  return pump;
}

std::optional<NetworkState> initial_state(const RunConfig& cfg) {
  if (cfg.solver.init == "reservoir") {
    NetworkState s;
    s.p_in = cfg.network.p_res;
    s.p_out = cfg.network.p_res;
    s.q_l_in = 0.0;
    s.q_l_out = 0.0;
    return s;
  }
  return std::nullopt;
}

std::size_t warmup_index(const RunConfig& cfg, double rpm, std::size_t n) {
  const double t_warm = cfg.solver.warmup_revolutions * 60.0 / rpm;
  auto idx =
      static_cast<std::size_t>(std::llround(t_warm / cfg.solver.h));
  if (idx >= n) idx = 0;
  return idx;
}

}  // namespace

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.sweep.roller_counts.empty() || cfg.sweep.speeds_rpm.empty()) {
    out << "warning: sweep is empty, nothing to simulate\n";
    return 0;
  }

  const ResolvedPump pump = resolve_pump(cfg);
  ensure_dir(cfg.paths.output_dir);

  out << "case,speed_rpm,rollers,q_model_ml_min,q_sim_ml_min,"
         "p_in_pp_kpa,p_out_pp_kpa\n";
  for (int nu : cfg.sweep.roller_counts) {
    PumpGeometry g = pump.geometry;
    g.roller_count = nu;
    if (engagement_overlaps(g)) {
      out << "warning: engagement arcs overlap for " << nu
          << " rollers, the free span is negative\n";
    }
    for (double rpm : cfg.sweep.speeds_rpm) {
      const MotorSpeed speed = MotorSpeed::from_rpm(rpm);
      const PulseTrain train =
          build_train(pump.curve, g, speed, cfg.solver.h, cfg.solver.t_sim);
      const SimulationResult sim =
          simulate(cfg.network, g, train, speed, initial_state(cfg));

      const std::string tag =
          "nu" + std::to_string(nu) + "_" + speed_tag(rpm) + "rpm";
      write_waveform_csv(cfg.paths.output_dir + "/waveform_" + tag + ".csv",
                         sim);
      write_train_csv(cfg.paths.output_dir + "/train_" + tag + ".csv", train);

      const std::size_t warm = warmup_index(cfg, rpm, sim.t.size());
      const std::size_t span = sim.t.size() - warm;
      const double q_model =
          units::m3_s_to_ml_s(average_flow(g, speed)) * 60.0;
      const double q_sim =
          units::m3_s_to_ml_s(kernels::sum(sim.q_in.data() + warm, span) /
                              static_cast<double>(span)) *
          60.0;
      const auto pp_in = kernels::minmax(sim.p_in.data() + warm, span);
      const auto pp_out = kernels::minmax(sim.p_out.data() + warm, span);

      out << tag << ',' << speed_tag(rpm) << ',' << nu << ','
          << fmt("%.4f", q_model) << ',' << fmt("%.4f", q_sim) << ','
          << fmt("%.4f", units::pa_to_kpa(pp_in.max - pp_in.min)) << ','
          << fmt("%.4f", units::pa_to_kpa(pp_out.max - pp_out.min)) << '\n';
    }
  }
  out << "wrote waveform and pulse-train files to " << cfg.paths.output_dir
      << "\n";
  return 0;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  if (cfg.paths.experimental_trace_dir.empty()) {
    fail(ErrorCode::MissingTrace,
         "no experimental trace directory configured");
  }
  const ResolvedPump pump = resolve_pump(cfg);
  ensure_dir(cfg.paths.output_dir);
  const std::string trace_dir =
      resolve_config_path(cfg, cfg.paths.experimental_trace_dir);
  const Normalizer norm = cfg.nrmse_normalizer == "range"
                              ? Normalizer::RangeOfReference
                              : Normalizer::MeanOfReference;

  out << "comparison against measured traces, statistics taken after "
      << fmt("%g", cfg.solver.warmup_revolutions) << " warmup revolutions\n";
  std::string report =
      "rollers,speed_rpm,rmse_in_kpa,nrmse_in,pearson_in,"
      "rmse_out_kpa,nrmse_out,pearson_out\n";

  for (int nu : cfg.sweep.roller_counts) {
    PumpGeometry g = pump.geometry;
    g.roller_count = nu;
    for (double rpm : cfg.sweep.speeds_rpm) {
      const std::string trace_path = trace_dir + "/trace_nu" +
                                     std::to_string(nu) + "_" +
                                     speed_tag(rpm) + "rpm.csv";
      if (!file_exists(trace_path)) {
        fail(ErrorCode::MissingTrace, "no measured trace at " + trace_path);
      }
      const PressureTrace trace = load_pressure_trace_csv(trace_path);

      const MotorSpeed speed = MotorSpeed::from_rpm(rpm);
      const PulseTrain train =
          build_train(pump.curve, g, speed, cfg.solver.h, cfg.solver.t_sim);
      const SimulationResult sim =
          simulate(cfg.network, g, train, speed, initial_state(cfg));

      const std::size_t warm = warmup_index(cfg, rpm, sim.t.size());
      const std::vector<double> grid(sim.t.begin() + warm, sim.t.end());
      const std::vector<double> ref_in =
          resample_linear(trace.t, trace.p_in, grid);
      const std::vector<double> ref_out =
          resample_linear(trace.t, trace.p_out, grid);

      AlignedSeries in{grid, ref_in,
                       {sim.p_in.begin() + warm, sim.p_in.end()}};
      AlignedSeries outp{grid, ref_out,
                         {sim.p_out.begin() + warm, sim.p_out.end()}};
      validate_aligned(in);
      validate_aligned(outp);

      const double r_in = pearson(in);
      const double r_out = pearson(outp);
      report += std::to_string(nu) + "," + speed_tag(rpm) + "," +
                fmt("%.6g", units::pa_to_kpa(rmse(in))) + "," +
                fmt("%.6g", nrmse(in, norm)) + "," + fmt("%.6g", r_in) + "," +
                fmt("%.6g", units::pa_to_kpa(rmse(outp))) + "," +
                fmt("%.6g", nrmse(outp, norm)) + "," + fmt("%.6g", r_out) +
                "\n";
      out << "rollers=" << nu << " speed=" << speed_tag(rpm)
          << "rpm pearson_in=" << fmt("%.4f", r_in)
          << " pearson_out=" << fmt("%.4f", r_out) << "\n";
      if (r_in < 0.7 || r_out < 0.7) {
        out << "warning: weak correlation for rollers=" << nu
            << " speed=" << speed_tag(rpm) << "rpm\n";
      }
    }
  }

  const std::string report_path =
      cfg.paths.output_dir + "/comparison_report.csv";
  std::ofstream rf(report_path, std::ios::binary);
  if (!rf) fail(ErrorCode::IoError, "cannot open for writing: " + report_path);
  rf << report;
  out << "wrote " << report_path << "\n";
  return 0;
}

int cmd_volume_table(const RunConfig& cfg, std::ostream& out) {
  const ResolvedPump pump = resolve_pump(cfg);
  ensure_dir(cfg.paths.output_dir);

  std::vector<MeasuredVolume> measured;
  if (!cfg.paths.measured_volumes_csv.empty()) {
    measured = load_measured_volumes_csv(
        resolve_config_path(cfg, cfg.paths.measured_volumes_csv));
  }

  std::string table =
      "rollers,speed_rpm,v_rot_ml,v_10rot_ml,measured_10rot_ml,deviation_pct\n";
  std::vector<double> model_vals;
  std::vector<double> measured_vals;
  for (int nu : cfg.sweep.roller_counts) {
    PumpGeometry g = pump.geometry;
    g.roller_count = nu;
    const double v_rot_ml = units::m3_to_ml(volume_per_rotation(g));
    for (double rpm : cfg.sweep.speeds_rpm) {
      const double ten = 10.0 * v_rot_ml;
      std::string m_txt = "";
      std::string d_txt = "";
      for (const auto& rec : measured) {
        if (rec.roller_count == nu &&
            std::abs(rec.speed_rpm - rpm) < 1e-9 * (1.0 + rpm)) {
          const double m_ml = units::m3_to_ml(rec.volume);
          m_txt = fmt("%.3f", m_ml);
          d_txt = fmt("%.4f", 100.0 * (ten - m_ml) / m_ml);
          model_vals.push_back(ten);
          measured_vals.push_back(m_ml);
          break;
        }
      }
      table += std::to_string(nu) + "," + speed_tag(rpm) + "," +
               fmt("%.3f", v_rot_ml) + "," + fmt("%.3f", ten) + "," + m_txt +
               "," + d_txt + "\n";
    }
  }
  out << table;

  if (measured_vals.size() >= 2) {
    AlignedSeries s{{}, measured_vals, model_vals};
    out << "nrmse vs measured volumes: " << fmt("%.6g", nrmse(s)) << "\n";
  }

  const std::string table_path = cfg.paths.output_dir + "/volume_table.csv";
  std::ofstream tf(table_path, std::ios::binary);
  if (!tf) fail(ErrorCode::IoError, "cannot open for writing: " + table_path);
  tf << table;
  out << "wrote " << table_path << "\n";
  return 0;
}

int cmd_fit_volume(const RunConfig& cfg, const std::string& csv_path,
                   std::ostream& out) {
  const std::string path =
      csv_path.empty() ? resolve_config_path(cfg, cfg.paths.rvd_csv) : csv_path;
  const RollerDisplacementCurve curve =
      fit_displacement(load_displacement_csv(path));

  out << "samples: " << curve.samples().size() << "\n";
  out << "coefficients (ml per deg^k):\n";
  for (std::size_t k = 0; k < curve.coefficients().size(); ++k) {
    out << "  c" << k << " = "
        << fmt("%.12g", units::m3_to_ml(curve.coefficients()[k])) << "\n";
  }
  out << "support_end_deg = " << fmt("%.6f", curve.support_end_deg()) << "\n";
  out << "v_max_ml = " << fmt("%.6f", units::m3_to_ml(curve.v_max())) << "\n";
  return 0;
}

int cmd_calibrate(const RunConfig& cfg, const CalibrateArgs& args,
                  std::ostream& out) {
  if (args.resistance_csv.empty() && args.compliance_csv.empty() &&
      args.trace_csv.empty()) {
    fail(ErrorCode::InvalidArgument,
         "calibrate needs at least one of --resistance, --compliance, --trace");
  }

  RunConfig updated = cfg;

  if (!args.resistance_csv.empty()) {
    const auto records = load_resistance_tests_csv(args.resistance_csv);
    if (records.empty()) {
      fail(ErrorCode::IoError, args.resistance_csv + ": no test records");
    }
    double acc = 0.0;
    for (const auto& rec : records) {
      const double r = resistance_from_test(rec);
      out << "resistance test: "
          << fmt("%.6g", units::si_to_kpa_s_per_ml(r)) << " kPa s/ml\n";
      acc += r;
    }
    const double mean_r = acc / static_cast<double>(records.size());
    updated.network.r_in = mean_r;
    updated.network.r_out = mean_r;
    out << "line resistance = " << fmt("%.6g", units::si_to_kpa_s_per_ml(mean_r))
        << " kPa s/ml (mean of " << records.size() << ")\n";
  }

  if (!args.compliance_csv.empty()) {
    const auto records = load_compliance_tests_csv(args.compliance_csv);
    if (records.empty()) {
      fail(ErrorCode::IoError, args.compliance_csv + ": no test records");
    }
    double acc = 0.0;
    for (const auto& rec : records) {
      const double c = compliance_from_test(rec);
      out << "compliance test: " << fmt("%.6g", units::si_to_ml_per_kpa(c))
          << " ml/kPa\n";
      acc += c;
    }
    const double mean_c = acc / static_cast<double>(records.size());
    updated.network.c_in = mean_c;
    updated.network.c_out = mean_c;
    out << "line compliance = " << fmt("%.6g", units::si_to_ml_per_kpa(mean_c))
        << " ml/kPa (mean of " << records.size() << ")\n";
  }

  if (!args.trace_csv.empty()) {
    if (!(args.l_grid_step > 0.0) || args.l_grid_stop < args.l_grid_start) {
      fail(ErrorCode::InvalidArgument, "inertance grid bounds are inverted");
    }
    FitMetric metric = FitMetric::PIn;
    if (args.metric == "p_out") {
      metric = FitMetric::POut;
    } else if (args.metric == "both") {
      metric = FitMetric::Both;
    } else if (args.metric != "p_in") {
      fail(ErrorCode::InvalidArgument,
           "metric must be p_in, p_out, or both: " + args.metric);
    }

    std::vector<double> grid;
    for (double l = args.l_grid_start; l <= args.l_grid_stop + 1e-12;
         l += args.l_grid_step) {
      grid.push_back(units::kpa_s2_per_ml_to_si(l));
    }

    const ResolvedPump pump = resolve_pump(cfg);
    const PressureTrace trace = load_pressure_trace_csv(args.trace_csv);
    const InertanceFit fit = fit_inertance(
        trace, updated.network, pump.geometry, pump.curve,
        MotorSpeed::from_rpm(args.trace_speed_rpm), grid, cfg.solver.h,
        cfg.solver.warmup_revolutions, metric);

    out << "l_kpa_s2_per_ml,rmse_kpa\n";
    for (std::size_t i = 0; i < fit.grid.size(); ++i) {
      out << fmt("%.6g", units::si_to_kpa_s2_per_ml(fit.grid[i])) << ","
          << fmt("%.6g", units::pa_to_kpa(fit.scores[i])) << "\n";
    }
    out << "line inertance = "
        << fmt("%.6g", units::si_to_kpa_s2_per_ml(fit.inertance))
        << " kPa s2/ml (rmse " << fmt("%.6g", units::pa_to_kpa(fit.rmse))
        << " kPa)\n";
    if (!fit.converged) {
      out << "warning: minimum sits at the grid edge, widen the search\n";
    }
    updated.network.l_in = fit.inertance;
    updated.network.l_out = fit.inertance;
  }

  std::string out_path = args.output_path;
  if (out_path.empty()) {
    ensure_dir(cfg.paths.output_dir);
    out_path = cfg.paths.output_dir + "/calibrated_network.ini";
  }
  save_config(updated, out_path);
  out << "wrote " << out_path << "\n";
  return 0;
}

int cmd_plot(const std::vector<std::string>& csv_paths,
             const std::string& out_dir, std::ostream& out) {
  if (csv_paths.empty()) {
    fail(ErrorCode::InvalidArgument, "plot needs at least one input file");
  }
  ensure_dir(out_dir);

  for (const auto& path : csv_paths) {
    const CsvTable table = read_csv(path);
    if (table.rows.empty()) {
      fail(ErrorCode::IoError, path + ": no data rows");
    }
    const auto has = [&](const char* name) {
      return std::find(table.columns.begin(), table.columns.end(), name) !=
             table.columns.end();
    };
    const auto column = [&](const char* name) {
      const std::size_t idx = table.column_index(name, path);
      std::vector<double> v(table.rows.size());
      for (std::size_t i = 0; i < table.rows.size(); ++i) {
        v[i] = table.rows[i][idx];
      }
      return v;
    };
    const std::string stem = stem_of(path);

    if (has("t_s") && has("p_in_kpa") && has("p_out_kpa")) {
      const std::string svg = out_dir + "/" + stem + "_pressure.svg";
      write_svg_plot(svg, stem, "t [s]", "pressure [kPa]",
                     {{"p_in", column("t_s"), column("p_in_kpa")},
                      {"p_out", column("t_s"), column("p_out_kpa")}});
      out << "wrote " << svg << "\n";
    } else if (has("t_s") && has("q_ed_in_ml_s") && has("q_ed_out_ml_s")) {
      const auto count_pulses = [](const std::vector<double>& q) {
        std::size_t n = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
          if (q[i] > 0.0 && (i == 0 || q[i - 1] == 0.0)) ++n;
        }
        return n;
      };
      const auto q_in = column("q_ed_in_ml_s");
      const auto q_out = column("q_ed_out_ml_s");
      const std::string svg = out_dir + "/" + stem + "_train.svg";
      write_svg_plot(
          svg, stem, "t [s]", "pulse flow [ml/s]",
          {{"q_ed_in", column("t_s"), q_in},
           {"q_ed_out", column("t_s"), q_out}},
          {{"pulses_in", std::to_string(count_pulses(q_in))},
           {"pulses_out", std::to_string(count_pulses(q_out))}});
      out << "wrote " << svg << "\n";
    } else if (has("angle_deg") && has("volume_ml")) {
      const std::string svg = out_dir + "/" + stem + "_volume.svg";
      write_svg_plot(svg, stem, "angle [deg]", "volume [ml]",
                     {{"displaced volume", column("angle_deg"),
                       column("volume_ml")}});
      out << "wrote " << svg << "\n";
    } else {
      fail(ErrorCode::IoError, path + ": columns match no known layout");
    }
  }
  return 0;
}

}  // namespace pumpsim
