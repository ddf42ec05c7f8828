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

#include "qtherm/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtherm {

namespace {

void check_targets(const std::vector<int>& targets, int num_qubits) {
  if (targets.empty()) {
    throw std::invalid_argument("op must have at least one target");
  }
  for (size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= num_qubits) {
      throw std::invalid_argument("target qubit out of range");
    }
    for (size_t j = i + 1; j < targets.size(); ++j) {
      if (targets[i] == targets[j]) {
        throw std::invalid_argument("op targets must be distinct");
      }
    }
  }
}

}  // namespace

void validate_circuit(const Circuit& circuit, int num_qubits) {
  for (const CircuitOp& op : circuit) {
    if (const Gate* g = std::get_if<Gate>(&op)) {
      check_targets(g->targets, num_qubits);
      continue;
    }
    const MeasurementOp& m = std::get<MeasurementOp>(op);
    check_targets(m.targets, num_qubits);
    if (m.basis_change) {
      std::vector<int> a = m.basis_change->targets;
      std::vector<int> b = m.targets;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        throw std::invalid_argument(
            "measurement basis change must act on exactly the measured qubits");
      }
    }
  }
}

int count_recorded_bits(const Circuit& circuit) {
  int bits = 0;
  for (const CircuitOp& op : circuit) {
    if (const MeasurementOp* m = std::get_if<MeasurementOp>(&op)) {
      if (m->record) bits += static_cast<int>(m->targets.size());
    }
  }
  return bits;
}

}  // namespace qtherm
