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

#include "qtherm/state_vector.hpp"

#include <cmath>
#include <stdexcept>

namespace qtherm {

namespace {

constexpr double kBranchFloor = 1e-14;

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 8) {
    throw std::invalid_argument("qubit count must be in [1, 8]");
  }
  amps_.assign(size_t{1} << num_qubits, 0.0);
  amps_[0] = 1.0;
}

void StateVector::apply(const Gate& g) {
  for (int t : g.targets) {
    if (t < 0 || t >= num_qubits_) {
      throw std::invalid_argument("gate target out of range");
    }
  }
  const int d = dim();
  if (g.targets.size() == 1) {
    const int mask = 1 << g.targets[0];
    const cdouble m00 = g.matrix[0], m01 = g.matrix[1];
    const cdouble m10 = g.matrix[2], m11 = g.matrix[3];
    for (int i = 0; i < d; ++i) {
      if (i & mask) continue;
      const cdouble a0 = amps_[i];
      const cdouble a1 = amps_[i | mask];
      amps_[i] = m00 * a0 + m01 * a1;
      amps_[i | mask] = m10 * a0 + m11 * a1;
    }
    return;
  }
  const int mask0 = 1 << g.targets[0];
  const int mask1 = 1 << g.targets[1];
  for (int i = 0; i < d; ++i) {
    if (i & (mask0 | mask1)) continue;
    const int idx[4] = {i, i | mask0, i | mask1, i | mask0 | mask1};
    cdouble in[4];
    for (int k = 0; k < 4; ++k) in[k] = amps_[idx[k]];
    for (int r = 0; r < 4; ++r) {
      cdouble acc = 0.0;
      for (int c = 0; c < 4; ++c) acc += g.matrix[r * 4 + c] * in[c];
      amps_[idx[r]] = acc;
    }
  }
}

double StateVector::probability_of_bit(int target, int bit) const {
  if (target < 0 || target >= num_qubits_) {
    throw std::invalid_argument("qubit index out of range");
  }
  const int mask = 1 << target;
  const int want = bit ? mask : 0;
  double p = 0.0;
  for (int i = 0; i < dim(); ++i) {
    if ((i & mask) == want) p += std::norm(amps_[i]);
  }
  return p;
}

int StateVector::measure_z(int target, ShotRng& rng) {
  const double p0 = probability_of_bit(target, 0);
  const int outcome = rng.uniform01() < p0 ? 0 : 1;
  collapse_z(target, outcome);
  return outcome;
}

void StateVector::collapse_z(int target, int outcome) {
  const double p = probability_of_bit(target, outcome);
  if (p < kBranchFloor) {
    throw std::runtime_error("measurement branch probability below 1e-14");
  }
  const int mask = 1 << target;
  const int want = outcome ? mask : 0;
  const double scale = 1.0 / std::sqrt(p);
  for (int i = 0; i < dim(); ++i) {
    if ((i & mask) == want) {
      amps_[i] *= scale;
    } else {
      amps_[i] = 0.0;
    }
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cdouble& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

}  // namespace qtherm
