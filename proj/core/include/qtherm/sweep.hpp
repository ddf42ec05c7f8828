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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtherm/analytics.hpp"
#include "qtherm/experiments.hpp"

namespace qtherm {

// Evenly spaced grid axis, endpoints included; points == 1 yields {lo}.
struct GridAxis {
  double lo = 0.0;
  double hi = 0.0;
  int points = 0;

  std::vector<double> values() const;
};

// Grid of nominal beta*omega products. Single-qubit experiments use axis1
// only; engines sweep axis1 x axis2 as (beta1 omega1, beta2 omega2).
struct GridSpec {
  GridAxis axis1;
  GridAxis axis2;
};

enum class OutputFormat { kCsv, kJson };

struct RunConfig {
  ExperimentKind experiment = ExperimentKind::kJarzynskiHadamard;
  Protocol protocol = Protocol::kAatpm;
  GridSpec grid;  // zero points selects the experiment's default grid
  double omega1 = 5.25;
  double omega2 = 5.17;
  std::uint64_t shots = 8192;
  int repetitions = 225;
  std::uint64_t seed = 1;
  int intermediate_steps = 4;
  NoiseConfig noise;
  bool exact = false;
  std::string out_path;
  OutputFormat format = OutputFormat::kCsv;

  // Fills unset grid axes with the experiment defaults: 21 points in
  // [-2.5, 2.5] for single-qubit experiments, 17x17 in [0, 2.5]^2 for
  // engines. Throws std::invalid_argument on invalid settings, with the
  // offending field named in the message.
  void finalize();
};

struct JarzynskiRow {
  double beta_omega_nominal;
  double beta_omega_measured;
  double p_plus, p_minus, p_zero;
  double err_p;
  double jarzynski_value, jarzynski_err;
  double oracle_p_plus, oracle_p_minus, oracle_p_zero;
};

struct IntermediateRow {
  int n_rotations;
  double beta_omega_nominal;
  double beta_omega_measured;
  double p_plus, p_minus, p_zero;
  double err_p;
  double fr_value, fr_err;
  double p00, p01;  // sampled conditional transition probabilities
  double oracle_p00, oracle_p01;
  double oracle_p_plus, oracle_p_minus, oracle_p_zero;
};

struct EngineRow {
  double b1_nominal, b2_nominal;
  double b1_measured, b2_measured;
  PabGrid p_ab;
  double err_p;
  Measured de1, de2, work;
  double fr_value, fr_err;
  ModeLabel mode;
  PabGrid oracle_p_ab;
  double oracle_de1, oracle_de2, oracle_work;
  double dev_p_max, dev_de1, dev_de2, dev_work;
};

// One sweep's results; exactly one row vector is populated, selected by
// config.experiment. Rows appear in grid order (axis1 outer, axis2 inner).
struct SweepReport {
  RunConfig config;
  std::vector<JarzynskiRow> jarzynski_rows;
  std::vector<IntermediateRow> intermediate_rows;
  std::vector<EngineRow> engine_rows;
};

// Runs the configured experiment at every grid point. Sampled mode pools
// counts over config.repetitions runs for probability and energy columns
// (per-entry error 1/sqrt(total shots)) and reports fluctuation-relation
// estimates as mean +/- sample std over the per-repetition values; exact
// mode evaluates the channel once per point with zero errors. Seeds derive
// per cell and per repetition from config.seed, so identical configs give
// identical reports. Measured temperatures fall back to the nominal value
// for marginals with an empty level (possible only at tiny shot counts).
SweepReport run_sweep(const RunConfig& config);

// Deviation-from-oracle summary of a report, per compared quantity.
struct QuantityDeviation {
  std::string quantity;
  double max_abs = 0.0;
  double mean_abs = 0.0;
  int exceed_count = 0;  // cells beyond the per-quantity tolerance
};

// Tolerances are five standard errors of each quantity at the pooled shot
// count (5/sqrt(N) for probabilities, scaled by the error formulas for
// energies), or 1e-10 in exact mode. `pass` is false when any noiseless
// quantity exceeds its tolerance; noisy runs report deviations but always
// pass (deviation from the noiseless oracle is the point of the noise).
struct OracleComparison {
  std::vector<QuantityDeviation> quantities;
  bool pass = true;
};

OracleComparison compare_to_oracle(const SweepReport& report);

}  // namespace qtherm
