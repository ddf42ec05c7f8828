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

#include <optional>
#include <variant>
#include <vector>

#include "qtherm/gates.hpp"

namespace qtherm {

// Projective measurement of one or more qubits in the computational basis,
// optionally preceded by a basis change. When `basis_change` is set, its
// adjoint is applied after the collapse so the measurement acts as the
// projector family V^dag |m><m| V. Unrecorded measurements still collapse
// (or dephase) the state but contribute no bits to the outcome record.
struct MeasurementOp {
  std::vector<int> targets;
  std::optional<Gate> basis_change;
  bool record = true;
};

using CircuitOp = std::variant<Gate, MeasurementOp>;
using Circuit = std::vector<CircuitOp>;

// Checks every op against the qubit count: targets in range and distinct, and
// any basis_change acting on exactly the measured targets. Throws
// std::invalid_argument on violation.
void validate_circuit(const Circuit& circuit, int num_qubits);

// Number of classical bits a full run records, in circuit order.
int count_recorded_bits(const Circuit& circuit);

}  // namespace qtherm
