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

#include "qtherm/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qtherm/rng.hpp"

namespace qtherm {

std::vector<double> GridAxis::values() const {
  if (points < 1) {
    throw std::invalid_argument("grid.points must be >= 1");
  }
  std::vector<double> out;
  out.reserve(static_cast<size_t>(points));
  if (points == 1) {
    out.push_back(lo);
    return out;
  }
  for (int i = 0; i < points; ++i) {
    out.push_back(lo + (hi - lo) * i / (points - 1));
  }
  return out;
}

namespace {

bool is_engine(ExperimentKind kind) {
  return kind == ExperimentKind::kSwapEngine ||
         kind == ExperimentKind::kQmcEngine;
}

void check_axis(const GridAxis& axis, const char* name) {
  if (axis.points < 1) {
    throw std::invalid_argument(std::string(name) + ".points must be >= 1");
  }
  if (!std::isfinite(axis.lo) || !std::isfinite(axis.hi)) {
    throw std::invalid_argument(std::string(name) + " bounds must be finite");
  }
}

}  // namespace

void RunConfig::finalize() {
  if (!exact && shots < 1) {
    throw std::invalid_argument("shots must be >= 1");
  }
  if (!exact && repetitions < 1) {
    throw std::invalid_argument("repetitions must be >= 1");
  }
  if (!(omega1 > 0.0)) {
    throw std::invalid_argument("omega1 must be positive");
  }
  if (!(omega2 > 0.0)) {
    throw std::invalid_argument("omega2 must be positive");
  }
  if (experiment == ExperimentKind::kIntermediateMeasurements &&
      intermediate_steps < 1) {
    throw std::invalid_argument("intermediate_steps must be >= 1");
  }
  noise.validate();
  if (is_engine(experiment)) {
    if (grid.axis1.points == 0) grid.axis1 = {0.0, 2.5, 17};
    if (grid.axis2.points == 0) grid.axis2 = grid.axis1;
    check_axis(grid.axis1, "grid.axis1");
    check_axis(grid.axis2, "grid.axis2");
  } else {
    if (grid.axis1.points == 0) grid.axis1 = {-2.5, 2.5, 21};
    check_axis(grid.axis1, "grid.axis1");
    grid.axis2 = {};
  }
}

namespace {

// Inverse temperature from a sampled or exact initial marginal, falling back
// to the nominal spec when a level has no weight (tiny shot counts only).
double beta_from_marginal(const StateMarginal& m, const QubitSpec& spec) {
  if (m.p0 <= 0.0 || m.p1 <= 0.0) return spec.beta;
  return measured_beta(m.p0, m.p1, spec.omega);
}

// Fluctuation-relation estimate of one run against its own measured
// temperatures.
double fr_statistic(const JointDistribution& joint,
                    const std::vector<QubitSpec>& specs) {
  const EnergyChangeDistribution dist =
      energy_change_distribution(joint, specs);
  const double beta1 = beta_from_marginal(initial_marginal(joint, 0), specs[0]);
  if (joint.num_subsystems == 1) {
    return jarzynski_estimator(dist, beta1).value;
  }
  const double beta2 = beta_from_marginal(initial_marginal(joint, 1), specs[1]);
  return multivariate_fr_estimator(dist, beta1, beta2).value;
}

struct CellRun {
  JointDistribution joint;  // pooled over repetitions, or the exact law
  FrEstimate fr;
};

// Evaluates one grid cell: the channel once, then either nothing more (exact
// mode) or `repetitions` sampled runs pooled together, with the fluctuation
// estimate tracked per repetition for its spread.
CellRun run_cell(const ExperimentDef& def, const RunConfig& config) {
  CellRun out;
  const JointDistribution exact = run_experiment_exact(def);
  if (config.exact) {
    out.joint = exact;
    out.fr = {fr_statistic(exact, def.specs), 0.0, 1};
    return out;
  }
  const int k = config.repetitions;
  std::vector<double> values;
  values.reserve(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    const JointDistribution rep = sample_from_exact(
        exact, def.shots, derive_stream(def.seed, static_cast<std::uint64_t>(j)));
    values.push_back(fr_statistic(rep, def.specs));
    if (j == 0) {
      out.joint = rep;
    } else {
      out.joint.merge(rep);
    }
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(k);
  double std_dev = 0.0;
  if (k >= 2) {
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    std_dev = std::sqrt(var / static_cast<double>(k - 1));
  }
  out.fr = {mean, std_dev, k};
  return out;
}

double measured_beta_omega(const JointDistribution& joint, int subsystem,
                           const QubitSpec& spec) {
  return beta_from_marginal(initial_marginal(joint, subsystem), spec) *
         spec.omega;
}

void fill_single_qubit_row(const RunConfig& config, double beta_omega,
                           std::uint64_t cell_seed, SweepReport& report) {
  ExperimentDef def;
  def.kind = config.experiment;
  def.protocol = config.protocol;
  def.intermediate_steps = config.intermediate_steps;
  def.specs = {{config.omega1, beta_omega / config.omega1}};
  def.shots = config.shots;
  def.seed = cell_seed;
  def.noise = config.noise;
  const CellRun cell = run_cell(def, config);
  const EnergyChangeDistribution dist =
      energy_change_distribution(cell.joint, def.specs);

  if (config.experiment == ExperimentKind::kJarzynskiHadamard) {
    JarzynskiRow row{};
    row.beta_omega_nominal = beta_omega;
    row.beta_omega_measured = measured_beta_omega(cell.joint, 0, def.specs[0]);
    row.p_plus = dist.cells[0].prob;
    row.p_zero = dist.cells[1].prob;
    row.p_minus = dist.cells[2].prob;
    row.err_p = cell.joint.entry_error();
    row.jarzynski_value = cell.fr.value;
    row.jarzynski_err = cell.fr.std_error;
    const WorkStatistics oracle = hadamard_work_statistics(beta_omega);
    row.oracle_p_plus = oracle.p_plus;
    row.oracle_p_minus = oracle.p_minus;
    row.oracle_p_zero = oracle.p_zero;
    report.jarzynski_rows.push_back(row);
    return;
  }

  IntermediateRow row{};
  row.n_rotations = config.intermediate_steps;
  row.beta_omega_nominal = beta_omega;
  row.beta_omega_measured = measured_beta_omega(cell.joint, 0, def.specs[0]);
  row.p_plus = dist.cells[0].prob;
  row.p_zero = dist.cells[1].prob;
  row.p_minus = dist.cells[2].prob;
  row.err_p = cell.joint.entry_error();
  row.fr_value = cell.fr.value;
  row.fr_err = cell.fr.std_error;
  const double n0 = cell.joint.prob(0, 0) + cell.joint.prob(0, 1);
  const double n1 = cell.joint.prob(1, 0) + cell.joint.prob(1, 1);
  row.p00 = n0 > 0.0 ? cell.joint.prob(0, 0) / n0 : 0.0;
  row.p01 = n1 > 0.0 ? cell.joint.prob(1, 0) / n1 : 0.0;
  const TransitionPair oracle_pmn =
      intermediate_pmn(config.intermediate_steps);
  row.oracle_p00 = oracle_pmn.p_same;
  row.oracle_p01 = oracle_pmn.p_flip;
  const GibbsPopulations pops = gibbs_populations(beta_omega);
  row.oracle_p_plus = pops.p1 * oracle_pmn.p_flip;
  row.oracle_p_minus = pops.p0 * oracle_pmn.p_flip;
  row.oracle_p_zero = oracle_pmn.p_same;
  report.intermediate_rows.push_back(row);
}

void fill_engine_row(const RunConfig& config, double b1, double b2,
                     std::uint64_t cell_seed, SweepReport& report) {
  ExperimentDef def;
  def.kind = config.experiment;
  def.protocol = config.protocol;
  def.specs = {{config.omega1, b1 / config.omega1},
               {config.omega2, b2 / config.omega2}};
  def.shots = config.shots;
  def.seed = cell_seed;
  def.noise = config.noise;
  const CellRun cell = run_cell(def, config);
  const EnergyChangeDistribution dist =
      energy_change_distribution(cell.joint, def.specs);

  EngineRow row{};
  row.b1_nominal = b1;
  row.b2_nominal = b2;
  row.b1_measured = measured_beta_omega(cell.joint, 0, def.specs[0]);
  row.b2_measured = measured_beta_omega(cell.joint, 1, def.specs[1]);
  for (size_t i = 0; i < row.p_ab.p.size(); ++i) {
    row.p_ab.p[i] = dist.cells[i].prob;
  }
  row.err_p = cell.joint.entry_error();
  const EngineEnergetics energetics = engine_energetics(cell.joint, def.specs);
  row.de1 = energetics.de1;
  row.de2 = energetics.de2;
  row.work = energetics.work;
  row.fr_value = cell.fr.value;
  row.fr_err = cell.fr.std_error;
  row.mode = classify_mode(row.de1, row.de2, row.work,
                           row.b1_measured / config.omega1,
                           row.b2_measured / config.omega2);
  row.oracle_p_ab = config.experiment == ExperimentKind::kSwapEngine
                        ? swap_joint_probabilities(b1, b2)
                        : qmc_joint_probabilities(b1, b2);
  const Energetics oracle =
      config.experiment == ExperimentKind::kSwapEngine
          ? swap_energetics(b1, b2, config.omega1, config.omega2)
          : qmc_energetics(b1, b2, config.omega1, config.omega2);
  row.oracle_de1 = oracle.de1;
  row.oracle_de2 = oracle.de2;
  row.oracle_work = oracle.work;
  row.dev_p_max = 0.0;
  for (size_t i = 0; i < row.p_ab.p.size(); ++i) {
    row.dev_p_max =
        std::max(row.dev_p_max, std::abs(row.p_ab.p[i] - row.oracle_p_ab.p[i]));
  }
  row.dev_de1 = std::abs(row.de1.value - oracle.de1);
  row.dev_de2 = std::abs(row.de2.value - oracle.de2);
  row.dev_work = std::abs(row.work.value - oracle.work);
  report.engine_rows.push_back(row);
}

}  // namespace

SweepReport run_sweep(const RunConfig& config) {
  RunConfig cfg = config;
  cfg.finalize();
  SweepReport report;
  report.config = cfg;
  const std::vector<double> axis1 = cfg.grid.axis1.values();
  if (is_engine(cfg.experiment)) {
    const std::vector<double> axis2 = cfg.grid.axis2.values();
    for (size_t i1 = 0; i1 < axis1.size(); ++i1) {
      for (size_t i2 = 0; i2 < axis2.size(); ++i2) {
        const std::uint64_t cell_seed =
            derive_stream(cfg.seed, i1 * axis2.size() + i2);
        fill_engine_row(cfg, axis1[i1], axis2[i2], cell_seed, report);
      }
    }
  } else {
    for (size_t i1 = 0; i1 < axis1.size(); ++i1) {
      fill_single_qubit_row(cfg, axis1[i1], derive_stream(cfg.seed, i1),
                            report);
    }
  }
  return report;
}

namespace {

bool is_noiseless(const NoiseConfig& noise) {
  return !noise.has_damping() && noise.readout_flip == 0.0 &&
         noise.over_rotation.epsilon == 0.0;
}

struct DevAccumulator {
  QuantityDeviation dev;
  std::size_t n = 0;

  explicit DevAccumulator(std::string name) { dev.quantity = std::move(name); }

  void add(double delta, double tolerance) {
    const double a = std::abs(delta);
    dev.max_abs = std::max(dev.max_abs, a);
    dev.mean_abs += a;
    if (a > tolerance) ++dev.exceed_count;
    ++n;
  }

  QuantityDeviation finish() {
    if (n > 0) dev.mean_abs /= static_cast<double>(n);
    return dev;
  }
};

// Entries pooled into each joint-probability cell (the zero-change cell sums
// several elementary outcomes, so its error scales accordingly).
int entry_multiplicity_1q(int cell) { return cell == 1 ? 2 : 1; }

int entry_multiplicity_2q(int cell) {
  const int a = 1 - cell / 3;
  const int b = 1 - cell % 3;
  return (a == 0 ? 2 : 1) * (b == 0 ? 2 : 1);
}

}  // namespace

OracleComparison compare_to_oracle(const SweepReport& report) {
  const RunConfig& cfg = report.config;
  const bool exact = cfg.exact;
  const double n_total =
      exact ? 0.0
            : static_cast<double>(cfg.shots) *
                  static_cast<double>(cfg.repetitions);
  const double unit = exact ? 0.0 : 1.0 / std::sqrt(n_total);
  // Five standard errors of each pooled quantity; exact runs must reproduce
  // the closed forms to numerical precision.
  const double p_tol = exact ? 1e-10 : 5.0 * unit;

  OracleComparison comparison;
  if (!report.jarzynski_rows.empty() || !report.intermediate_rows.empty()) {
    DevAccumulator dev_plus("P_plus");
    DevAccumulator dev_minus("P_minus");
    DevAccumulator dev_zero("P_zero");
    DevAccumulator dev_fr("fluctuation_relation");
    DevAccumulator dev_p00("p00");
    DevAccumulator dev_p01("p01");
    const bool intermediate = !report.intermediate_rows.empty();
    const size_t rows = intermediate ? report.intermediate_rows.size()
                                     : report.jarzynski_rows.size();
    for (size_t r = 0; r < rows; ++r) {
      double p_plus, p_minus, p_zero, op, om, oz, fr, fr_err, nominal;
      if (intermediate) {
        const IntermediateRow& row = report.intermediate_rows[r];
        p_plus = row.p_plus; p_minus = row.p_minus; p_zero = row.p_zero;
        op = row.oracle_p_plus; om = row.oracle_p_minus; oz = row.oracle_p_zero;
        fr = row.fr_value; fr_err = row.fr_err;
        nominal = row.beta_omega_nominal;
        const GibbsPopulations pops = gibbs_populations(nominal);
        const double tol0 =
            exact ? 1e-10
                  : (pops.p0 > 0.0 ? 2.5 / std::sqrt(n_total * pops.p0) : 0.0);
        const double tol1 =
            exact ? 1e-10
                  : (pops.p1 > 0.0 ? 2.5 / std::sqrt(n_total * pops.p1) : 0.0);
        dev_p00.add(row.p00 - row.oracle_p00, tol0);
        dev_p01.add(row.p01 - row.oracle_p01, tol1);
      } else {
        const JarzynskiRow& row = report.jarzynski_rows[r];
        p_plus = row.p_plus; p_minus = row.p_minus; p_zero = row.p_zero;
        op = row.oracle_p_plus; om = row.oracle_p_minus; oz = row.oracle_p_zero;
        fr = row.jarzynski_value; fr_err = row.jarzynski_err;
        nominal = row.beta_omega_nominal;
      }
      dev_plus.add(p_plus - op, p_tol * entry_multiplicity_1q(0));
      dev_zero.add(p_zero - oz, p_tol * entry_multiplicity_1q(1));
      dev_minus.add(p_minus - om, p_tol * entry_multiplicity_1q(2));
      if (exact) {
        dev_fr.add(fr - 1.0, 1e-10);
      } else if (cfg.repetitions >= 2) {
        dev_fr.add(fr - 1.0,
                   5.0 * fr_err / std::sqrt(static_cast<double>(cfg.repetitions)));
      }
    }
    comparison.quantities.push_back(dev_plus.finish());
    comparison.quantities.push_back(dev_minus.finish());
    comparison.quantities.push_back(dev_zero.finish());
    if (intermediate) {
      comparison.quantities.push_back(dev_p00.finish());
      comparison.quantities.push_back(dev_p01.finish());
    }
    comparison.quantities.push_back(dev_fr.finish());
  }

  if (!report.engine_rows.empty()) {
    DevAccumulator dev_p("P_ab");
    DevAccumulator dev_de1("dE1");
    DevAccumulator dev_de2("dE2");
    DevAccumulator dev_work("work");
    DevAccumulator dev_fr("fluctuation_relation");
    for (const EngineRow& row : report.engine_rows) {
      for (int cell = 0; cell < 9; ++cell) {
        dev_p.add(row.p_ab.p[static_cast<size_t>(cell)] -
                      row.oracle_p_ab.p[static_cast<size_t>(cell)],
                  p_tol * entry_multiplicity_2q(cell));
      }
      dev_de1.add(row.de1.value - row.oracle_de1,
                  exact ? 1e-10 : 5.0 * 2.0 * cfg.omega1 * unit);
      dev_de2.add(row.de2.value - row.oracle_de2,
                  exact ? 1e-10 : 5.0 * 2.0 * cfg.omega2 * unit);
      dev_work.add(row.work.value - row.oracle_work,
                   exact ? 1e-10
                         : 5.0 * 2.0 * (cfg.omega1 + cfg.omega2) * unit);
      if (exact) {
        dev_fr.add(row.fr_value - 1.0, 1e-10);
      } else if (cfg.repetitions >= 2) {
        dev_fr.add(row.fr_value - 1.0,
                   5.0 * row.fr_err /
                       std::sqrt(static_cast<double>(cfg.repetitions)));
      }
    }
    comparison.quantities.push_back(dev_p.finish());
    comparison.quantities.push_back(dev_de1.finish());
    comparison.quantities.push_back(dev_de2.finish());
    comparison.quantities.push_back(dev_work.finish());
    comparison.quantities.push_back(dev_fr.finish());
  }

  if (is_noiseless(cfg.noise)) {
    for (const QuantityDeviation& q : comparison.quantities) {
      if (q.exceed_count > 0) comparison.pass = false;
    }
  }
  return comparison;
}

}  // namespace qtherm
