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

#include "qtherm/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qtherm {

namespace {

constexpr double kUnitarityTolerance = 1e-10;

}  // namespace

double unitarity_defect(const Gate& g) {
  const int d = g.dim();
  double worst = 0.0;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      cdouble acc = 0.0;
      for (int k = 0; k < d; ++k) {
        acc += std::conj(g.matrix[k * d + r]) * g.matrix[k * d + c];
      }
      if (r == c) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

Gate Gate::make(std::vector<cdouble> matrix, std::vector<int> targets,
                GateKind kind, double angle) {
  if (targets.empty() || targets.size() > 2) {
    throw std::invalid_argument("gate must act on one or two qubits");
  }
  for (int t : targets) {
    if (t < 0) throw std::invalid_argument("gate target must be non-negative");
  }
  if (targets.size() == 2 && targets[0] == targets[1]) {
    throw std::invalid_argument("gate targets must be distinct");
  }
  const size_t d = size_t{1} << targets.size();
  if (matrix.size() != d * d) {
    throw std::invalid_argument("gate matrix size does not match target count");
  }
  Gate g{std::move(matrix), std::move(targets), kind, angle};
  const double defect = unitarity_defect(g);
  if (defect >= kUnitarityTolerance) {
    throw std::invalid_argument("gate matrix is not unitary (defect " +
                                std::to_string(defect) + ")");
  }
  return g;
}

Gate adjoint(const Gate& g) {
  const int d = g.dim();
  std::vector<cdouble> m(static_cast<size_t>(d) * d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      m[c * d + r] = std::conj(g.matrix[r * d + c]);
    }
  }
  // The adjoint of a tagged rotation is the same rotation at negated angle,
  // so calibration-error transforms treat it consistently.
  return Gate::make(std::move(m), g.targets, g.kind, -g.angle);
}

namespace gates {

namespace {

const cdouble kI{0.0, 1.0};

}  // namespace

Gate identity(int target) {
  return Gate::make({1.0, 0.0, 0.0, 1.0}, {target});
}

Gate x(int target) {
  return Gate::make({0.0, 1.0, 1.0, 0.0}, {target});
}

Gate y(int target) {
  return Gate::make({0.0, -kI, kI, 0.0}, {target});
}

Gate z(int target) {
  return Gate::make({1.0, 0.0, 0.0, -1.0}, {target});
}

Gate hadamard(int target) {
  const double r = 1.0 / std::sqrt(2.0);
  return Gate::make({r, r, r, -r}, {target});
}

Gate rx(double angle, int target) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  return Gate::make({c, -kI * s, -kI * s, c}, {target}, GateKind::kRotationX,
                    angle);
}

Gate ry(double angle, int target) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  return Gate::make({c, -s, s, c}, {target}, GateKind::kRotationY, angle);
}

Gate cnot(int control, int target) {
  // Local index = control bit + 2 * target bit (targets[0] is the local LSB).
  return Gate::make({1, 0, 0, 0,   //
                     0, 0, 0, 1,   //
                     0, 0, 1, 0,   //
                     0, 1, 0, 0},
                    {control, target});
}

Gate swap_gate(int a, int b) {
  return Gate::make({1, 0, 0, 0,   //
                     0, 0, 1, 0,   //
                     0, 1, 0, 0,   //
                     0, 0, 0, 1},
                    {a, b});
}

Gate singlet_triplet(int a, int b) {
  const double r = 1.0 / std::sqrt(2.0);
  // Symmetric and real, so it is its own adjoint; rows 1 and 2 map the
  // one-excitation subspace onto the triplet and singlet combinations.
  return Gate::make({1, 0, 0, 0,   //
                     0, r, r, 0,   //
                     0, r, -r, 0,  //
                     0, 0, 0, 1},
                    {a, b});
}

}  // namespace gates

}  // namespace qtherm
