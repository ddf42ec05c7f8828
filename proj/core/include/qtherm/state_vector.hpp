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
#include "qtherm/rng.hpp"

namespace qtherm {

// Pure state of n qubits, n in [1, 8]. Qubit 0 is the least significant bit
// of the basis-state index. Starts in |0...0>.
class StateVector {
 public:
  explicit StateVector(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  int dim() const { return 1 << num_qubits_; }

  const std::vector<cdouble>& amplitudes() const { return amps_; }
  cdouble amplitude(int basis_state) const { return amps_[basis_state]; }

  // Applies a one- or two-qubit unitary in place.
  void apply(const Gate& g);

  // Probability that qubit `target` reads `bit` in the computational basis.
  double probability_of_bit(int target, int bit) const;

  // Projective Z measurement of one qubit: samples an outcome, collapses, and
  // renormalizes. Returns the observed bit.
  int measure_z(int target, ShotRng& rng);

  // Collapses onto a chosen outcome without sampling. Throws
  // std::runtime_error if the branch probability is below 1e-14.
  void collapse_z(int target, int outcome);

  double norm() const;

 private:
  int num_qubits_;
  std::vector<cdouble> amps_;
};

}  // namespace qtherm
