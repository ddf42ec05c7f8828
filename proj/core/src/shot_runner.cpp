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

#include "qtherm/shot_runner.hpp"

#include <stdexcept>

namespace qtherm {

OutcomeRecord run_shot(const Circuit& circuit, StateVector& psi, ShotRng& rng,
                       const NoiseConfig* noise) {
  if (noise != nullptr && noise->has_damping()) {
    throw std::invalid_argument(
        "damping noise requires the density-matrix backend");
  }
  const double flip =
      noise != nullptr && noise->readout_flip > 0.0 ? noise->readout_flip : 0.0;
  OutcomeRecord record;
  for (const CircuitOp& op : circuit) {
    if (const Gate* g = std::get_if<Gate>(&op)) {
      psi.apply(*g);
      continue;
    }
    const MeasurementOp& m = std::get<MeasurementOp>(op);
    if (m.basis_change) psi.apply(*m.basis_change);
    for (int t : m.targets) {
      int bit = psi.measure_z(t, rng);
      if (m.record) {
        // The flip corrupts only the recorded value; the collapsed state
        // keeps the true outcome.
        if (flip > 0.0 && rng.uniform01() < flip) bit ^= 1;
        record.push_back({t, bit});
      }
    }
    if (m.basis_change) psi.apply(adjoint(*m.basis_change));
  }
  return record;
}

}  // namespace qtherm
