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

#include <map>
#include <vector>

#include "qtherm/circuit.hpp"
#include "qtherm/density_matrix.hpp"
#include "qtherm/noise.hpp"

namespace qtherm {

// Exact outcome distribution over the recorded bits of a circuit, computed by
// branching a density matrix at every recorded measurement. Keys are recorded
// bit strings in circuit order; every string over the full alphabet appears,
// including zero-probability ones. Damping (if configured) is applied after
// each gate on its targets; readout confusion is folded in classically at the
// end. Probabilities sum to 1 within 1e-10 (asserted). Supports at most 16
// recorded bits. Over-rotation must be pre-applied by the caller.
std::map<std::vector<int>, double> channel_probabilities(
    const Circuit& circuit, const DensityMatrix& initial,
    const NoiseConfig* noise = nullptr);

}  // namespace qtherm
