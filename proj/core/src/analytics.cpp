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

#include "qtherm/analytics.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace qtherm {

WorkStatistics hadamard_work_statistics(double beta_omega) {
  const GibbsPopulations pops = gibbs_populations(beta_omega);
  return {pops.p1 / 2.0, pops.p0 / 2.0, 0.5};
}

TransitionPair intermediate_pmn(int num_rotations) {
  if (num_rotations < 1) {
    throw std::invalid_argument("the drive needs at least one rotation");
  }
  if (num_rotations == 1) return {0.0, 1.0};
  const double c = std::cos(M_PI / num_rotations);
  const double s2 = std::sin(M_PI / num_rotations) *
                    std::sin(M_PI / num_rotations);
  // cos^{N-2}(pi/N) sin^2(pi/N) stays well conditioned for all N, unlike the
  // equivalent difference of near-unit powers.
  const double core = std::pow(c, num_rotations - 2) * s2;
  return {(1.0 - core) / 2.0, (1.0 + core) / 2.0};
}

namespace {

using Stochastic = std::array<std::array<double, 2>, 2>;

// |M[r][c]|^2 entrywise for a 2x2 unitary M = A * B.
Stochastic abs2_product(const std::vector<cdouble>& a,
                        const std::vector<cdouble>& b) {
  Stochastic out{};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const cdouble m = a[static_cast<size_t>(2 * r)] * b[static_cast<size_t>(c)] +
                        a[static_cast<size_t>(2 * r + 1)] *
                            b[static_cast<size_t>(2 + c)];
      out[static_cast<size_t>(r)][static_cast<size_t>(c)] = std::norm(m);
    }
  }
  return out;
}

Stochastic multiply(const Stochastic& a, const Stochastic& b) {
  Stochastic out{};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out[static_cast<size_t>(r)][static_cast<size_t>(c)] =
          a[static_cast<size_t>(r)][0] * b[0][static_cast<size_t>(c)] +
          a[static_cast<size_t>(r)][1] * b[1][static_cast<size_t>(c)];
    }
  }
  return out;
}

std::vector<cdouble> matrix_product(const std::vector<cdouble>& a,
                                    const std::vector<cdouble>& b) {
  std::vector<cdouble> out(4);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out[static_cast<size_t>(2 * r + c)] =
          a[static_cast<size_t>(2 * r)] * b[static_cast<size_t>(c)] +
          a[static_cast<size_t>(2 * r + 1)] * b[static_cast<size_t>(2 + c)];
    }
  }
  return out;
}

}  // namespace

TransitionMatrix chain_pmn(int num_rotations, const Gate& drive,
                           const Gate& basis_change) {
  if (num_rotations < 1) {
    throw std::invalid_argument("the drive needs at least one rotation");
  }
  if (drive.dim() != 2 || basis_change.dim() != 2) {
    throw std::invalid_argument("chain_pmn needs single-qubit gates");
  }
  const std::vector<cdouble>& u = drive.matrix;
  const std::vector<cdouble>& v = basis_change.matrix;
  const std::vector<cdouble> v_dag = adjoint(basis_change).matrix;
  if (num_rotations == 1) {
    // No intermediate measurement: p[m][n] = |<m|U|n>|^2.
    TransitionMatrix out{};
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        out[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            std::norm(u[static_cast<size_t>(2 * r + c)]);
      }
    }
    return out;
  }
  // Segments between collapses: VU first, VUV^dag in the middle (N - 2
  // copies), UV^dag last. Each collapse makes probabilities compose
  // classically, so the chain is a product of entrywise |.|^2 matrices.
  const Stochastic first = abs2_product(v, u);
  const Stochastic mid = abs2_product(matrix_product(v, u), v_dag);
  const Stochastic last = abs2_product(u, v_dag);
  Stochastic acc = first;
  for (int k = 0; k < num_rotations - 2; ++k) acc = multiply(mid, acc);
  return multiply(last, acc);
}

int PabGrid::index(int a, int b) {
  if (a < -1 || a > 1 || b < -1 || b > 1) {
    throw std::invalid_argument("energy-change labels must lie in {-1, 0, +1}");
  }
  return (1 - a) * 3 + (1 - b);
}

PabGrid swap_joint_probabilities(double b1, double b2) {
  // 1 / (Z1 Z2) = 1 / (4 cosh(b1/2) cosh(b2/2)), written with exp to stay
  // finite for any argument sign.
  const double inv_zz =
      1.0 / (4.0 * std::cosh(b1 / 2.0) * std::cosh(b2 / 2.0));
  PabGrid grid;
  grid.at(0, 0) = 2.0 * std::cosh((b1 + b2) / 2.0) * inv_zz;
  grid.at(-1, +1) = std::exp(-(b1 - b2) / 2.0) * inv_zz;
  grid.at(+1, -1) = std::exp((b1 - b2) / 2.0) * inv_zz;
  return grid;
}

PabGrid qmc_joint_probabilities(double b1, double b2) {
  PabGrid grid = swap_joint_probabilities(b1, b2);
  const double shifted = (grid.at(-1, +1) + grid.at(+1, -1)) / 2.0;
  grid.at(-1, +1) /= 2.0;
  grid.at(+1, -1) /= 2.0;
  grid.at(0, 0) += shifted;
  return grid;
}

namespace {

// Population imbalance F = p1(qubit 2) - p1(qubit 1) of the Gibbs inputs;
// the full exchange moves exactly this much excitation from 2 to 1.
double population_imbalance(double b1, double b2) {
  return 1.0 / (1.0 + std::exp(b2)) - 1.0 / (1.0 + std::exp(b1));
}

}  // namespace

Energetics swap_energetics(double b1, double b2, double omega1,
                           double omega2) {
  if (omega1 <= 0.0 || omega2 <= 0.0) {
    throw std::invalid_argument("qubit gaps must be positive");
  }
  const double f = population_imbalance(b1, b2);
  return {f * omega1, -f * omega2, f * (omega1 - omega2)};
}

Energetics qmc_energetics(double b1, double b2, double omega1, double omega2) {
  const Energetics full = swap_energetics(b1, b2, omega1, omega2);
  return {full.de1 / 2.0, full.de2 / 2.0, full.work / 2.0};
}

const char* mode_label_name(ModeLabel label) {
  switch (label) {
    case ModeLabel::kRefrigerator:
      return "refrigerator";
    case ModeLabel::kHeatEngine:
      return "heat-engine";
    case ModeLabel::kThermalAccelerator:
      return "thermal-accelerator";
    case ModeLabel::kHeater:
      return "heater";
    case ModeLabel::kUndetermined:
      return "undetermined";
  }
  return "undetermined";
}

namespace {

// Sign of a measured value, or 0 when it is not resolved from zero at one
// sigma. sigma = 0 means an exact value, resolved unless exactly zero.
int resolved_sign(const Measured& m) {
  if (std::abs(m.value) <= m.sigma || m.value == 0.0) return 0;
  return m.value > 0.0 ? 1 : -1;
}

}  // namespace

ModeLabel classify_mode(const Measured& de1, const Measured& de2,
                        const Measured& work, double beta1, double beta2) {
  if (beta1 == beta2) return ModeLabel::kUndetermined;
  const Measured& de_cold = beta1 > beta2 ? de1 : de2;
  const Measured& de_hot = beta1 > beta2 ? de2 : de1;
  const int sc = resolved_sign(de_cold);
  const int sh = resolved_sign(de_hot);
  if (sc > 0 && sh > 0) return ModeLabel::kHeater;
  const int sw = resolved_sign(work);
  if (sc > 0 && sh < 0 && sw < 0) return ModeLabel::kHeatEngine;
  if (sc < 0 && sh > 0 && sw > 0) return ModeLabel::kRefrigerator;
  if (sc > 0 && sh < 0 && sw > 0) return ModeLabel::kThermalAccelerator;
  return ModeLabel::kUndetermined;
}

PhaseDiagram theoretical_phase_diagram(double omega1, double omega2,
                                       int grid_points, double range) {
  if (grid_points < 1) {
    throw std::invalid_argument("phase diagram needs at least one grid point");
  }
  if (!(range > 0.0)) {
    throw std::invalid_argument("phase diagram range must be positive");
  }
  PhaseDiagram diagram;
  diagram.grid_points = grid_points;
  diagram.range = range;
  diagram.labels.reserve(static_cast<size_t>(grid_points) *
                         static_cast<size_t>(grid_points));
  std::array<std::size_t, 5> counts{};
  for (int i1 = 1; i1 <= grid_points; ++i1) {
    const double b1 = range * i1 / grid_points;
    for (int i2 = 1; i2 <= grid_points; ++i2) {
      const double b2 = range * i2 / grid_points;
      const Energetics e = swap_energetics(b1, b2, omega1, omega2);
      // b = beta * omega, so beta_j = b_j / omega_j.
      const ModeLabel label =
          classify_mode({e.de1, 0.0}, {e.de2, 0.0}, {e.work, 0.0},
                        b1 / omega1, b2 / omega2);
      diagram.labels.push_back(label);
      ++counts[static_cast<size_t>(label)];
    }
  }
  const double total = static_cast<double>(diagram.labels.size());
  for (size_t k = 0; k < counts.size(); ++k) {
    diagram.fractions[k] = static_cast<double>(counts[k]) / total;
  }
  return diagram;
}

HeatLeakPrediction heat_leak_expansion(
    double beta, double mean_q, const std::vector<WorkHeatSample>& samples) {
  if (samples.empty()) {
    throw std::invalid_argument("heat-leak expansion needs samples");
  }
  double acc = 0.0;
  for (const WorkHeatSample& s : samples) {
    acc += s.heat * std::exp(-beta * s.work);
  }
  const double correction = beta * acc / static_cast<double>(samples.size());
  return {1.0 - correction, std::abs(beta * mean_q) < 0.3};
}

}  // namespace qtherm
