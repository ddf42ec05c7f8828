// Copyright 2026 The qtherm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtherm/report_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace qtherm {

const char kJarzynskiCsvHeader[] =
    "beta_omega_nominal,beta_omega_measured,P_plus,P_minus,P_zero,err_P,"
    "jarzynski,jarzynski_err,oracle_P_plus,oracle_P_minus,oracle_P_zero";

const char kIntermediateCsvHeader[] =
    "n_rotations,beta_omega_nominal,beta_omega_measured,P_plus,P_minus,"
    "P_zero,err_P,fr,fr_err,p00,p01,oracle_p00,oracle_p01,oracle_P_plus,"
    "oracle_P_minus,oracle_P_zero";

const char kEngineCsvHeader[] =
    "b1_nominal,b2_nominal,b1_measured,b2_measured,P_pp,P_p0,P_pm,P_0p,P_00,"
    "P_0m,P_mp,P_m0,P_mm,err_P,dE1,dE1_err,dE2,dE2_err,work,work_err,fr,"
    "fr_err,mode,oracle_P_pp,oracle_P_p0,oracle_P_pm,oracle_P_0p,oracle_P_00,"
    "oracle_P_0m,oracle_P_mp,oracle_P_m0,oracle_P_mm,oracle_dE1,oracle_dE2,"
    "oracle_work,dev_P_max,dev_dE1,dev_dE2,dev_work";

const char kRotationCsvHeader[] = "angle,sigma_z,sigma_z_ideal";

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

const char* experiment_kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kJarzynskiHadamard:
      return "jarzynski-hadamard";
    case ExperimentKind::kIntermediateMeasurements:
      return "intermediate-measurements";
    case ExperimentKind::kSwapEngine:
      return "swap-engine";
    case ExperimentKind::kQmcEngine:
      return "qmc-engine";
  }
  return "jarzynski-hadamard";
}

const char* protocol_name(Protocol protocol) {
  return protocol == Protocol::kStandardTpm ? "standard-tpm" : "aatpm";
}

namespace {

// Comma-joined field list with the frozen numeric precision.
class Row {
 public:
  Row& num(double value) { return raw(format_number(value)); }
  Row& integer(long long value) { return raw(std::to_string(value)); }
  Row& raw(const std::string& field) {
    if (!text_.empty()) text_ += ',';
    text_ += field;
    return *this;
  }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

void jarzynski_fields(const JarzynskiRow& r, Row& row) {
  row.num(r.beta_omega_nominal)
      .num(r.beta_omega_measured)
      .num(r.p_plus)
      .num(r.p_minus)
      .num(r.p_zero)
      .num(r.err_p)
      .num(r.jarzynski_value)
      .num(r.jarzynski_err)
      .num(r.oracle_p_plus)
      .num(r.oracle_p_minus)
      .num(r.oracle_p_zero);
}

void intermediate_fields(const IntermediateRow& r, Row& row) {
  row.integer(r.n_rotations)
      .num(r.beta_omega_nominal)
      .num(r.beta_omega_measured)
      .num(r.p_plus)
      .num(r.p_minus)
      .num(r.p_zero)
      .num(r.err_p)
      .num(r.fr_value)
      .num(r.fr_err)
      .num(r.p00)
      .num(r.p01)
      .num(r.oracle_p00)
      .num(r.oracle_p01)
      .num(r.oracle_p_plus)
      .num(r.oracle_p_minus)
      .num(r.oracle_p_zero);
}

void engine_fields(const EngineRow& r, Row& row) {
  row.num(r.b1_nominal).num(r.b2_nominal).num(r.b1_measured).num(
      r.b2_measured);
  for (double p : r.p_ab.p) row.num(p);
  row.num(r.err_p)
      .num(r.de1.value)
      .num(r.de1.sigma)
      .num(r.de2.value)
      .num(r.de2.sigma)
      .num(r.work.value)
      .num(r.work.sigma)
      .num(r.fr_value)
      .num(r.fr_err)
      .raw(mode_label_name(r.mode));
  for (double p : r.oracle_p_ab.p) row.num(p);
  row.num(r.oracle_de1)
      .num(r.oracle_de2)
      .num(r.oracle_work)
      .num(r.dev_p_max)
      .num(r.dev_de1)
      .num(r.dev_de2)
      .num(r.dev_work);
}

const char* csv_header(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kJarzynskiHadamard:
      return kJarzynskiCsvHeader;
    case ExperimentKind::kIntermediateMeasurements:
      return kIntermediateCsvHeader;
    case ExperimentKind::kSwapEngine:
    case ExperimentKind::kQmcEngine:
      return kEngineCsvHeader;
  }
  return kJarzynskiCsvHeader;
}

std::vector<std::string> split_columns(const char* header) {
  std::vector<std::string> names;
  std::string current;
  for (const char* c = header; *c != '\0'; ++c) {
    if (*c == ',') {
      names.push_back(current);
      current.clear();
    } else {
      current += *c;
    }
  }
  names.push_back(current);
  return names;
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Key/value pairs in insertion order; values are pre-rendered JSON.
class JsonObject {
 public:
  JsonObject& field(const std::string& key, const std::string& rendered) {
    if (!body_.empty()) body_ += ',';
    body_ += json_quote(key) + ":" + rendered;
    return *this;
  }
  JsonObject& num(const std::string& key, double value) {
    return field(key, format_number(value));
  }
  std::string render() const { return "{" + body_ + "}"; }

 private:
  std::string body_;
};

std::string config_json(const RunConfig& cfg) {
  JsonObject grid;
  grid.field("points", std::to_string(cfg.grid.axis1.points))
      .num("lo", cfg.grid.axis1.lo)
      .num("hi", cfg.grid.axis1.hi)
      .field("points2", std::to_string(cfg.grid.axis2.points))
      .num("lo2", cfg.grid.axis2.lo)
      .num("hi2", cfg.grid.axis2.hi);
  JsonObject noise;
  noise.num("damping", cfg.noise.damping_toward_excited)
      .num("readout_flip", cfg.noise.readout_flip)
      .num("over_rotation", cfg.noise.over_rotation.epsilon)
      .num("over_rotation_power", cfg.noise.over_rotation.power);
  JsonObject obj;
  obj.field("experiment", json_quote(experiment_kind_name(cfg.experiment)))
      .field("protocol", json_quote(protocol_name(cfg.protocol)))
      .field("shots", std::to_string(cfg.shots))
      .field("repetitions", std::to_string(cfg.repetitions))
      .field("seed", std::to_string(cfg.seed))
      .field("exact", cfg.exact ? "true" : "false")
      .num("omega1", cfg.omega1)
      .num("omega2", cfg.omega2)
      .field("intermediate_steps", std::to_string(cfg.intermediate_steps))
      .field("grid", grid.render())
      .field("noise", noise.render());
  return obj.render();
}

// Renders one row as JSON keyed by the CSV column names, so the two formats
// carry identical fields.
std::string row_json(const std::vector<std::string>& columns,
                     const std::string& csv_row) {
  JsonObject obj;
  size_t start = 0;
  for (const std::string& column : columns) {
    size_t end = csv_row.find(',', start);
    if (end == std::string::npos) end = csv_row.size();
    const std::string field = csv_row.substr(start, end - start);
    // The mode column is the only non-numeric field.
    obj.field(column, column == "mode" ? json_quote(field) : field);
    start = end + 1;
  }
  return obj.render();
}

std::vector<std::string> csv_rows(const SweepReport& report) {
  std::vector<std::string> rows;
  for (const JarzynskiRow& r : report.jarzynski_rows) {
    Row row;
    jarzynski_fields(r, row);
    rows.push_back(row.text());
  }
  for (const IntermediateRow& r : report.intermediate_rows) {
    Row row;
    intermediate_fields(r, row);
    rows.push_back(row.text());
  }
  for (const EngineRow& r : report.engine_rows) {
    Row row;
    engine_fields(r, row);
    rows.push_back(row.text());
  }
  return rows;
}

}  // namespace

std::string report_to_csv(const SweepReport& report) {
  std::string out = csv_header(report.config.experiment);
  out += '\n';
  for (const std::string& row : csv_rows(report)) {
    out += row;
    out += '\n';
  }
  return out;
}

std::string report_to_json(const SweepReport& report) {
  const std::vector<std::string> columns =
      split_columns(csv_header(report.config.experiment));
  std::string rows;
  for (const std::string& row : csv_rows(report)) {
    if (!rows.empty()) rows += ',';
    rows += row_json(columns, row);
  }
  JsonObject obj;
  obj.field("config", config_json(report.config))
      .field("rows", "[" + rows + "]");
  return obj.render() + "\n";
}

void emit_report(const SweepReport& report) {
  if (report.config.out_path.empty()) {
    throw std::runtime_error("output path is empty");
  }
  const std::string text = report.config.format == OutputFormat::kJson
                               ? report_to_json(report)
                               : report_to_csv(report);
  std::ofstream out(report.config.out_path,
                    std::ios::out | std::ios::binary | std::ios::trunc);
  out << text;
  out.flush();
  if (!out) {
    throw std::runtime_error("cannot write " + report.config.out_path);
  }
}

std::string rotation_curve_to_csv(const RotationCurve& curve) {
  std::string out = kRotationCsvHeader;
  out += '\n';
  for (size_t i = 0; i < curve.angles.size(); ++i) {
    Row row;
    row.num(curve.angles[i]).num(curve.sigma_z[i]).num(curve.sigma_z_ideal[i]);
    out += row.text();
    out += '\n';
  }
  return out;
}

std::string rotation_curve_to_json(const RotationCurve& curve) {
  std::string rows;
  for (size_t i = 0; i < curve.angles.size(); ++i) {
    JsonObject obj;
    obj.num("angle", curve.angles[i])
        .num("sigma_z", curve.sigma_z[i])
        .num("sigma_z_ideal", curve.sigma_z_ideal[i]);
    if (!rows.empty()) rows += ',';
    rows += obj.render();
  }
  return "{\"rows\":[" + rows + "]}\n";
}

namespace {

std::string trim(const std::string& s) {
  size_t begin = 0;
  size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
    --end;
  }
  return s.substr(begin, end - begin);
}

double parse_double(const std::string& value, const std::string& key) {
  try {
    size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("invalid number '" + value + "' for " + key);
}

long long parse_integer(const std::string& value, const std::string& key) {
  try {
    size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("invalid integer '" + value + "' for " + key);
}

std::uint64_t parse_unsigned(const std::string& value, const std::string& key) {
  try {
    size_t pos = 0;
    if (!value.empty() && value[0] != '-') {
      const unsigned long long v = std::stoull(value, &pos);
      if (pos == value.size()) return v;
    }
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("invalid unsigned integer '" + value + "' for " +
                              key);
}

bool parse_bool(const std::string& value, const std::string& key) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw std::invalid_argument("invalid boolean '" + value + "' for " + key);
}

ExperimentKind parse_experiment(const std::string& value) {
  if (value == "jarzynski-hadamard") return ExperimentKind::kJarzynskiHadamard;
  if (value == "intermediate-measurements") {
    return ExperimentKind::kIntermediateMeasurements;
  }
  if (value == "swap-engine") return ExperimentKind::kSwapEngine;
  if (value == "qmc-engine") return ExperimentKind::kQmcEngine;
  throw std::invalid_argument("unknown experiment '" + value + "'");
}

Protocol parse_protocol(const std::string& value) {
  if (value == "standard-tpm") return Protocol::kStandardTpm;
  if (value == "aatpm") return Protocol::kAatpm;
  throw std::invalid_argument("unknown protocol '" + value + "'");
}

OutputFormat parse_format(const std::string& value) {
  if (value == "csv") return OutputFormat::kCsv;
  if (value == "json") return OutputFormat::kJson;
  throw std::invalid_argument("unknown format '" + value + "'");
}

}  // namespace

void apply_config_override(RunConfig& config, const std::string& section_key,
                           const std::string& value) {
  const std::string key = trim(section_key);
  const std::string v = trim(value);
  if (key == "run.experiment") {
    config.experiment = parse_experiment(v);
  } else if (key == "run.protocol") {
    config.protocol = parse_protocol(v);
  } else if (key == "run.shots") {
    config.shots = parse_unsigned(v, key);
  } else if (key == "run.repetitions") {
    config.repetitions = static_cast<int>(parse_integer(v, key));
  } else if (key == "run.seed") {
    config.seed = parse_unsigned(v, key);
  } else if (key == "run.exact") {
    config.exact = parse_bool(v, key);
  } else if (key == "grid.points") {
    config.grid.axis1.points = static_cast<int>(parse_integer(v, key));
  } else if (key == "grid.lo") {
    config.grid.axis1.lo = parse_double(v, key);
  } else if (key == "grid.hi") {
    config.grid.axis1.hi = parse_double(v, key);
  } else if (key == "grid.points2") {
    config.grid.axis2.points = static_cast<int>(parse_integer(v, key));
  } else if (key == "grid.lo2") {
    config.grid.axis2.lo = parse_double(v, key);
  } else if (key == "grid.hi2") {
    config.grid.axis2.hi = parse_double(v, key);
  } else if (key == "qubits.omega1") {
    config.omega1 = parse_double(v, key);
  } else if (key == "qubits.omega2") {
    config.omega2 = parse_double(v, key);
  } else if (key == "intermediate.steps") {
    config.intermediate_steps = static_cast<int>(parse_integer(v, key));
  } else if (key == "noise.damping") {
    config.noise.damping_toward_excited = parse_double(v, key);
  } else if (key == "noise.readout_flip") {
    config.noise.readout_flip = parse_double(v, key);
  } else if (key == "noise.over_rotation") {
    config.noise.over_rotation.epsilon = parse_double(v, key);
  } else if (key == "noise.over_rotation_power") {
    config.noise.over_rotation.power = parse_double(v, key);
  } else if (key == "output.path") {
    config.out_path = v;
  } else if (key == "output.format") {
    config.format = parse_format(v);
  } else {
    throw std::invalid_argument("unknown setting '" + key + "'");
  }
}

RunConfig parse_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot read config file: " + path);
  }
  RunConfig config;
  std::string line;
  std::string section;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#' || text[0] == ';') continue;
    const std::string where = path + ":" + std::to_string(line_number);
    if (text.front() == '[') {
      if (text.back() != ']') {
        throw std::invalid_argument(where + ": malformed section header");
      }
      section = trim(text.substr(1, text.size() - 2));
      if (section != "run" && section != "grid" && section != "qubits" &&
          section != "intermediate" && section != "noise" &&
          section != "output") {
        throw std::invalid_argument(where + ": unknown section '" + section +
                                    "'");
      }
      continue;
    }
    const size_t eq = text.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(where + ": expected 'key = value'");
    }
    if (section.empty()) {
      throw std::invalid_argument(where + ": setting before any [section]");
    }
    try {
      apply_config_override(config, section + "." + trim(text.substr(0, eq)),
                            text.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }
  return config;
}

}  // namespace qtherm
