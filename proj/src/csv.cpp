#include "pumpsim/csv.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
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

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(line);
  while (std::getline(ss, cur, ',')) out.push_back(trim(cur));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_number(const std::string& field, const std::string& path,
                    std::size_t line_no) {
  const char* begin = field.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    fail(ErrorCode::IoError, path + ":" + std::to_string(line_no) +
                                 ": not a number: '" + field + "'");
  }
  return v;
}

void require_columns(const CsvTable& table,
                     const std::vector<std::string>& names,
                     const std::string& path) {
  for (const auto& name : names) table.column_index(name, path);
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(ErrorCode::IoError, "cannot open for writing: " + path);
  }
  out << body;
  if (!out) {
    fail(ErrorCode::IoError, "write failed: " + path);
  }
}

std::string format_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::size_t CsvTable::column_index(const std::string& name,
                                   const std::string& path) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  fail(ErrorCode::IoError, path + ": missing column '" + name + "'");
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorCode::IoError, "cannot open: " + path);
  }

  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;

    const std::vector<std::string> fields = split_fields(stripped);
    if (table.columns.empty()) {
      table.columns = fields;
      continue;
    }
    if (fields.size() != table.columns.size()) {
      fail(ErrorCode::IoError,
           path + ":" + std::to_string(line_no) + ": expected " +
               std::to_string(table.columns.size()) + " fields, got " +
               std::to_string(fields.size()));
    }
    std::vector<double> row(fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      row[i] = parse_number(fields[i], path, line_no);
    }
    table.rows.push_back(std::move(row));
  }

  if (table.columns.empty()) {
    fail(ErrorCode::IoError, path + ": no header row");
  }
  return table;
}

std::vector<DisplacementSample> load_displacement_csv(const std::string& path) {
  const CsvTable table = read_csv(path);
  require_columns(table, {"angle_deg", "volume_ml"}, path);
  const std::size_t ca = table.column_index("angle_deg", path);
  const std::size_t cv = table.column_index("volume_ml", path);

  std::vector<DisplacementSample> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    out.push_back({row[ca], units::ml_to_m3(row[cv])});
  }
  return out;
}

PressureTrace load_pressure_trace_csv(const std::string& path) {
  const CsvTable table = read_csv(path);
  require_columns(table, {"t_s", "p_in_kpa", "p_out_kpa"}, path);
  const std::size_t ct = table.column_index("t_s", path);
  const std::size_t ci = table.column_index("p_in_kpa", path);
  const std::size_t co = table.column_index("p_out_kpa", path);

  PressureTrace trace;
  trace.t.reserve(table.rows.size());
  trace.p_in.reserve(table.rows.size());
  trace.p_out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    trace.t.push_back(row[ct]);
    trace.p_in.push_back(units::kpa_to_pa(row[ci]));
    trace.p_out.push_back(units::kpa_to_pa(row[co]));
  }
  return trace;
}

std::vector<ResistanceTestRecord> load_resistance_tests_csv(
    const std::string& path) {
  const CsvTable table = read_csv(path);
  require_columns(table, {"delta_p_kpa", "mass_kg", "duration_s", "temp_c"},
                  path);
  const std::size_t cp = table.column_index("delta_p_kpa", path);
  const std::size_t cm = table.column_index("mass_kg", path);
  const std::size_t cd = table.column_index("duration_s", path);
  const std::size_t ct = table.column_index("temp_c", path);

  std::vector<ResistanceTestRecord> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    ResistanceTestRecord rec;
    rec.delta_p = units::kpa_to_pa(row[cp]);
    rec.displaced_mass = row[cm];
    rec.duration = row[cd];
    rec.water_density = water_density_kg_m3(row[ct]);
    out.push_back(rec);
  }
  return out;
}

std::vector<ComplianceTestRecord> load_compliance_tests_csv(
    const std::string& path) {
  const CsvTable table = read_csv(path);
  require_columns(table, {"delta_p_kpa", "delta_v_ml", "v_total_ml"}, path);
  const std::size_t cp = table.column_index("delta_p_kpa", path);
  const std::size_t cdv = table.column_index("delta_v_ml", path);
  const std::size_t cvt = table.column_index("v_total_ml", path);

  std::vector<ComplianceTestRecord> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    ComplianceTestRecord rec;
    rec.delta_p = units::kpa_to_pa(row[cp]);
    rec.injected_volume = units::ml_to_m3(row[cdv]);
    rec.total_volume = units::ml_to_m3(row[cvt]);
    out.push_back(rec);
  }
  return out;
}

std::vector<MeasuredVolume> load_measured_volumes_csv(const std::string& path) {
  const CsvTable table = read_csv(path);
  require_columns(table, {"speed_rpm", "roller_count", "volume_ml"}, path);
  const std::size_t cs = table.column_index("speed_rpm", path);
  const std::size_t cn = table.column_index("roller_count", path);
  const std::size_t cv = table.column_index("volume_ml", path);

  std::vector<MeasuredVolume> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    MeasuredVolume rec;
    rec.speed_rpm = row[cs];
    rec.roller_count = static_cast<int>(row[cn]);
    rec.volume = units::ml_to_m3(row[cv]);
    out.push_back(rec);
  }
  return out;
}

void write_waveform_csv(const std::string& path, const SimulationResult& r) {
  std::string body =
      "t_s,p_in_kpa,p_out_kpa,q_l_in_ml_s,q_l_out_ml_s,q_in_ml_s,q_out_ml_s\n";
  for (std::size_t k = 0; k < r.t.size(); ++k) {
    body += format_g(r.t[k]);
    body += ',';
    body += format_g(units::pa_to_kpa(r.p_in[k]));
    body += ',';
    body += format_g(units::pa_to_kpa(r.p_out[k]));
    body += ',';
    body += format_g(units::m3_s_to_ml_s(r.q_l_in[k]));
    body += ',';
    body += format_g(units::m3_s_to_ml_s(r.q_l_out[k]));
    body += ',';
    body += format_g(units::m3_s_to_ml_s(r.q_in[k]));
    body += ',';
    body += format_g(units::m3_s_to_ml_s(r.q_out[k]));
    body += '\n';
  }
  write_text_file(path, body);
}

void write_train_csv(const std::string& path, const PulseTrain& train) {
  std::string body = "t_s,q_ed_in_ml_s,q_ed_out_ml_s\n";
  for (std::size_t k = 0; k < train.q_ed_in.size(); ++k) {
    body += format_g(static_cast<double>(k) * train.h);
    body += ',';
    body += format_g(units::m3_s_to_ml_s(train.q_ed_in[k]));
    body += ',';
    body += format_g(units::m3_s_to_ml_s(train.q_ed_out[k]));
    body += '\n';
  }
  write_text_file(path, body);
}

}  // namespace pumpsim
