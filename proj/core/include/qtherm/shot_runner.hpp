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

#include "qtherm/circuit.hpp"
#include "qtherm/noise.hpp"
#include "qtherm/rng.hpp"
#include "qtherm/state_vector.hpp"

namespace qtherm {

struct RecordedBit {
  int qubit;
  int bit;
};

using OutcomeRecord = std::vector<RecordedBit>;

// Executes one shot of the circuit on a pure state. Measurements collapse
// via Born sampling; recorded ones append to the returned record in circuit
// order. The optional noise model contributes readout flips and is expected
// to be damping-free here (damping needs the density backend; callers route
// damped circuits through channel_probabilities). Over-rotation is a circuit
// transform and must be applied by the caller before running shots.
OutcomeRecord run_shot(const Circuit& circuit, StateVector& psi, ShotRng& rng,
                       const NoiseConfig* noise = nullptr);

}  // namespace qtherm
