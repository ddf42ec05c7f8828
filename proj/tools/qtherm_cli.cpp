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

// Command line front end. Exit codes: 0 success, 1 configuration error,
// 2 oracle deviation in a noiseless run, 3 I/O error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtherm/report_io.hpp"
#include "qtherm/sweep.hpp"

namespace {

using qtherm::RunConfig;

std::vector<double> split_numbers(const std::string& text, char sep) {
  std::vector<double> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(sep, start);
    if (end == std::string::npos) end = text.size();
    const std::string field = text.substr(start, end - start);
    size_t pos = 0;
    out.push_back(std::stod(field, &pos));
    if (pos != field.size()) throw std::invalid_argument("trailing characters");
    start = end + 1;
    if (end == text.size()) break;
  }
  return out;
}

// "points,lo,hi" for one axis, "points,lo,hi;points,lo,hi" for two.
void parse_grid_flag(const std::string& text, RunConfig& config) {
  try {
    const size_t semi = text.find(';');
    const std::vector<double> first =
        split_numbers(text.substr(0, semi), ',');
    if (first.size() != 3) throw std::invalid_argument("need three fields");
    config.grid.axis1 = {first[1], first[2], static_cast<int>(first[0])};
    if (semi != std::string::npos) {
      const std::vector<double> second =
          split_numbers(text.substr(semi + 1), ',');
      if (second.size() != 3) throw std::invalid_argument("need three fields");
      config.grid.axis2 = {second[1], second[2], static_cast<int>(second[0])};
    }
  } catch (const std::exception&) {
    throw std::invalid_argument(
        "invalid --grid '" + text + "', expected points,lo,hi[;points,lo,hi]");
  }
}

// "damping,readout_flip,over_rotation[,power]".
void parse_noise_flag(const std::string& text, RunConfig& config) {
  std::vector<double> fields;
  try {
    fields = split_numbers(text, ',');
  } catch (const std::exception&) {
    fields.clear();
  }
  if (fields.size() != 3 && fields.size() != 4) {
    throw std::invalid_argument(
        "invalid --noise '" + text +
        "', expected damping,readout_flip,over_rotation[,power]");
  }
  config.noise.damping_toward_excited = fields[0];
  config.noise.readout_flip = fields[1];
  config.noise.over_rotation.epsilon = fields[2];
  if (fields.size() == 4) config.noise.over_rotation.power = fields[3];
}

void print_comparison(const qtherm::OracleComparison& comparison) {
  std::cerr << "oracle deviation summary:\n";
  for (const qtherm::QuantityDeviation& q : comparison.quantities) {
    std::cerr << "  " << q.quantity << ": max " << qtherm::format_number(q.max_abs)
              << " mean " << qtherm::format_number(q.mean_abs) << " exceed "
              << q.exceed_count << "\n";
  }
  std::cerr << "oracle check: " << (comparison.pass ? "PASS" : "FAIL") << "\n";
}

int run_sweep_command(const RunConfig& config) {
  const qtherm::SweepReport report = qtherm::run_sweep(config);
  if (report.config.out_path.empty()) {
    std::cout << (report.config.format == qtherm::OutputFormat::kJson
                      ? qtherm::report_to_json(report)
                      : qtherm::report_to_csv(report));
    if (!std::cout) throw std::runtime_error("cannot write standard output");
  } else {
    qtherm::emit_report(report);
  }
  const qtherm::OracleComparison comparison = qtherm::compare_to_oracle(report);
  print_comparison(comparison);
  return comparison.pass ? 0 : 2;
}

int run_rotation_command(const RunConfig& config, int points,
                         double max_angle) {
  if (points < 1) throw std::invalid_argument("points must be >= 1");
  std::vector<double> angles;
  angles.reserve(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) {
    angles.push_back(points == 1 ? 0.0 : max_angle * i / (points - 1));
  }
  const qtherm::RotationCurve curve = qtherm::rotation_fidelity_curve(
      angles, config.noise, config.exact ? 0 : config.shots, config.seed);
  const std::string text = config.format == qtherm::OutputFormat::kJson
                               ? qtherm::rotation_curve_to_json(curve)
                               : qtherm::rotation_curve_to_csv(curve);
  if (config.out_path.empty()) {
    std::cout << text;
    if (!std::cout) throw std::runtime_error("cannot write standard output");
    return 0;
  }
  std::ofstream out(config.out_path,
                    std::ios::out | std::ios::binary | std::ios::trunc);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("cannot write " + config.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-point-measurement circuit experiments"};
  app.require_subcommand(1);

  std::string config_path, experiment, protocol, grid, noise, out, format;
  std::uint64_t shots = 0, seed = 0;
  int repetitions = 0, steps = 0, points = 13;
  double omega1 = 0.0, omega2 = 0.0, max_angle = 2.0 * M_PI;
  bool exact = false;

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Sweep an experiment over a temperature grid");
  sweep->add_option("--config", config_path, "INI config file");
  sweep->add_option("--experiment", experiment,
                    "jarzynski-hadamard | intermediate-measurements | "
                    "swap-engine | qmc-engine");
  sweep->add_option("--protocol", protocol, "standard-tpm | aatpm");
  sweep->add_option("--shots", shots, "Shots per repetition");
  sweep->add_option("--repetitions", repetitions, "Repetitions per grid cell");
  sweep->add_option("--seed", seed, "Master seed");
  sweep->add_option("--grid", grid, "points,lo,hi[;points,lo,hi]");
  sweep->add_option("--noise", noise,
                    "damping,readout_flip,over_rotation[,power]");
  sweep->add_option("--steps", steps, "Rotations N for the interrupted drive");
  sweep->add_option("--omega1", omega1, "Qubit 1 level splitting");
  sweep->add_option("--omega2", omega2, "Qubit 2 level splitting");
  sweep->add_flag("--exact", exact, "Exact channel evaluation, no sampling");
  sweep->add_option("--out", out, "Output path (default: standard output)");
  sweep->add_option("--format", format, "csv | json");

  CLI::App* rotation = app.add_subcommand(
      "rotation-curve", "Sigma-z expectation after R_Y(angle), vs cos(angle)");
  rotation->add_option("--points", points, "Angles, evenly spaced from 0");
  rotation->add_option("--max-angle", max_angle, "Last angle (default 2*pi)");
  rotation->add_option("--shots", shots, "Shots per angle");
  rotation->add_option("--seed", seed, "Master seed");
  rotation->add_option("--noise", noise,
                       "damping,readout_flip,over_rotation[,power]");
  rotation->add_flag("--exact", exact, "Exact channel evaluation");
  rotation->add_option("--out", out, "Output path (default: standard output)");
  rotation->add_option("--format", format, "csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) config = qtherm::parse_run_config(config_path);
    const CLI::App* cmd = sweep->parsed() ? sweep : rotation;
    auto given = [cmd](const char* name) { return cmd->count(name) > 0; };
    if (given("--shots")) config.shots = shots;
    if (given("--seed")) config.seed = seed;
    if (given("--noise")) parse_noise_flag(noise, config);
    if (given("--exact")) config.exact = true;
    if (given("--out")) config.out_path = out;
    if (given("--format")) {
      qtherm::apply_config_override(config, "output.format", format);
    }
    if (sweep->parsed()) {
      if (given("--experiment")) {
        qtherm::apply_config_override(config, "run.experiment", experiment);
      }
      if (given("--protocol")) {
        qtherm::apply_config_override(config, "run.protocol", protocol);
      }
      if (given("--repetitions")) config.repetitions = repetitions;
      if (given("--grid")) parse_grid_flag(grid, config);
      if (given("--steps")) config.intermediate_steps = steps;
      if (given("--omega1")) config.omega1 = omega1;
      if (given("--omega2")) config.omega2 = omega2;
      return run_sweep_command(config);
    }
    config.noise.validate();
    return run_rotation_command(config, points, max_angle);
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
