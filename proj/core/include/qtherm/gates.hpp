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

#include <complex>
#include <vector>

namespace qtherm {

using cdouble = std::complex<double>;

// Tag for gates whose matrix is a function of a single angle. Calibration-error
// models rebuild tagged gates with a perturbed angle; generic gates are opaque.
enum class GateKind { kGeneric, kRotationX, kRotationY };

// Unitary on one or two qubits. targets[0] is the least significant bit of the
// local matrix index, matching the global convention that qubit 0 is the least
// significant bit of a basis-state index.
struct Gate {
  std::vector<cdouble> matrix;  // row-major, dim x dim
  std::vector<int> targets;
  GateKind kind = GateKind::kGeneric;
  double angle = 0.0;

  int dim() const { return 1 << static_cast<int>(targets.size()); }

  // Validates targets (one or two, distinct, non-negative) and unitarity of
  // the matrix to within 1e-10. Throws std::invalid_argument otherwise.
  static Gate make(std::vector<cdouble> matrix, std::vector<int> targets,
                   GateKind kind = GateKind::kGeneric, double angle = 0.0);
};

// Conjugate transpose.
Gate adjoint(const Gate& g);

// Largest |(G^dag G - I)_{ij}|.
double unitarity_defect(const Gate& g);

namespace gates {

Gate identity(int target);
Gate x(int target);
Gate y(int target);
Gate z(int target);
Gate hadamard(int target);
Gate rx(double angle, int target);
Gate ry(double angle, int target);
Gate cnot(int control, int target);
Gate swap_gate(int a, int b);

// Basis change V for a measurement in the singlet-triplet basis of two qubits:
// applying V and reading out in the computational basis measures the projectors
// onto {|00>, (|01>+|10>)/sqrt2, (|01>-|10>)/sqrt2, |11>}.
Gate singlet_triplet(int a, int b);

}  // namespace gates

}  // namespace qtherm
