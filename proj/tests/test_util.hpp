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

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "qtherm/gates.hpp"
#include "qtherm/state_vector.hpp"

namespace qtherm::test {

inline void check_amplitudes(const StateVector& state,
                             const std::vector<cdouble>& expected,
                             double tolerance = 1e-12) {
  REQUIRE(state.amplitudes().size() == expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    CAPTURE(i);
    CHECK(std::abs(state.amplitude(i) - expected[i]) < tolerance);
  }
}

// Statevector prepared in the given computational basis state.
inline StateVector basis_state(int num_qubits, int index) {
  StateVector state(num_qubits);
  for (int q = 0; q < num_qubits; ++q) {
    if ((index >> q) & 1) state.apply(gates::x(q));
  }
  return state;
}

// Scratch file path inside the test binary's working directory.
inline std::string temp_path(const std::string& name) { return name; }

}  // namespace qtherm::test
