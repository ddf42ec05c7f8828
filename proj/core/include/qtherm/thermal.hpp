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

#include "qtherm/circuit.hpp"

namespace qtherm {

// One qubit with Hamiltonian H = (omega/2) sigma_z, so |0> has energy
// +omega/2 and |1> is the ground state at -omega/2. beta is the inverse
// temperature of the Gibbs state exp(-beta H)/Z.
struct QubitSpec {
  double omega = 1.0;
  double beta = 0.0;
};

// Rotation angle phi = 2 arctan(e^{beta omega / 2}), in (0, pi), with which
// R_Y(phi) on the ancilla followed by CNOT(ancilla -> system) prepares the
// two-qubit purification (e^{-beta omega/4}|00> + e^{+beta omega/4}|11>) /
// sqrt(Z) from |00>.
double purification_angle(double beta_omega);
double purification_angle(const QubitSpec& spec);

// Inverse map: the beta*omega a given purification angle encodes.
double nominal_beta_omega(double phi);

// Gate sequence preparing the purification of the Gibbs state of `spec` on
// qubit `system`, entangled with qubit `ancilla`.
struct PurificationPair {
  int system;
  int ancilla;
  QubitSpec spec;
};

std::vector<Gate> build_purification(const PurificationPair& pair);

// Effective inverse temperature read off sampled populations:
// beta_m * omega = ln(p1 / p0). Throws std::invalid_argument unless both
// probabilities are positive and they sum to 1 within 1e-9.
double measured_beta(double p0, double p1, double omega);

// Gibbs populations {p0, p1} for H = (omega/2) sigma_z at inverse
// temperature beta: p0 = e^{-beta omega/2}/Z, p1 = e^{+beta omega/2}/Z.
struct GibbsPopulations {
  double p0;
  double p1;
};

GibbsPopulations gibbs_populations(double beta_omega);

}  // namespace qtherm
