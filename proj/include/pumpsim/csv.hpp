#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pumpsim/calibration.hpp"
#include "pumpsim/displacement.hpp"
#include "pumpsim/network.hpp"
#include "pumpsim/pulse_train.hpp"

namespace pumpsim {

// Numeric table with a header row.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column_index(const std::string& name,
                           const std::string& path) const;
};

CsvTable read_csv(const std::string& path);

// header: angle_deg,volume_ml[,run_id]; repeated angles are averaged by the
// fit, not here
std::vector<DisplacementSample> load_displacement_csv(const std::string& path);

// header: t_s,p_in_kpa,p_out_kpa
PressureTrace load_pressure_trace_csv(const std::string& path);

// header: delta_p_kpa,mass_kg,duration_s,temp_c
std::vector<ResistanceTestRecord> load_resistance_tests_csv(
    const std::string& path);

// header: delta_p_kpa,delta_v_ml,v_total_ml
std::vector<ComplianceTestRecord> load_compliance_tests_csv(
    const std::string& path);

// header: speed_rpm,roller_count,volume_ml
struct MeasuredVolume {
  double speed_rpm = 0.0;
  int roller_count = 0;
  double volume = 0.0;  // [m3]
};
std::vector<MeasuredVolume> load_measured_volumes_csv(const std::string& path);

void write_waveform_csv(const std::string& path, const SimulationResult& r);
void write_train_csv(const std::string& path, const PulseTrain& train);

}  // namespace pumpsim
