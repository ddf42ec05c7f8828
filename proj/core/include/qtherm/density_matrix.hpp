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

#include <vector>

#include "qtherm/gates.hpp"
#include "qtherm/state_vector.hpp"

namespace qtherm {

// Mixed state of n qubits, n in [1, 8], stored as a dense row-major matrix.
// Qubit 0 is the least significant bit of a basis index. Starts in |0...0>.
class DensityMatrix {
 public:
  explicit DensityMatrix(int num_qubits);

  static DensityMatrix from_state(const StateVector& psi);

  // Validates Hermiticity and unit trace to 1e-10 and positivity to
  // min eigenvalue >= -1e-8. Throws std::invalid_argument on violation.
  static DensityMatrix from_matrix(int num_qubits, std::vector<cdouble> data);

  int num_qubits() const { return num_qubits_; }
  int dim() const { return 1 << num_qubits_; }

  cdouble entry(int row, int col) const { return data_[row * dim_ + col]; }
  const std::vector<cdouble>& data() const { return data_; }

  // rho -> U rho U^dag for a one- or two-qubit unitary.
  void apply(const Gate& g);

  // Probability that qubit `target` reads `bit`.
  double probability_of_bit(int target, int bit) const;

  // Projects onto the Z outcome `bit` of one qubit and renormalizes. Throws
  // std::runtime_error if the branch probability is below 1e-14.
  void project_z(int target, int bit);

  // Unrecorded Z measurement: zeroes coherences between the two branches of
  // `target` and keeps both populations.
  void dephase_z(int target);

  // Generic Kraus pair application: rho -> sum_k K_k rho K_k^dag, each K_k
  // acting on a single qubit given as a 2x2 row-major matrix.
  void apply_kraus_1q(const std::vector<std::vector<cdouble>>& kraus,
                      int target);

  double trace_real() const;

  // Partial trace keeping the qubits in `keep` (ascending order preserved:
  // keep[0] becomes qubit 0 of the result).
  DensityMatrix reduced(const std::vector<int>& keep) const;

 private:
  int num_qubits_;
  int dim_;
  std::vector<cdouble> data_;
};

// Smallest eigenvalue of a Hermitian matrix (row-major, dim x dim), found by
// cyclic complex Jacobi rotations. Used to validate positivity.
double min_eigenvalue_hermitian(const std::vector<cdouble>& data, int dim);

}  // namespace qtherm
