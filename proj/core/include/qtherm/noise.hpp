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
#include "qtherm/density_matrix.hpp"

namespace qtherm {

// Coherent calibration error on rotation gates: a commanded angle a becomes
// a * (1 + epsilon * (a/pi)^power). The relative error grows with the
// commanded angle, so a pi pulse is hurt more than a pi/4 pulse.
struct OverRotation {
  double epsilon = 0.0;
  double power = 2.0;

  double adjusted(double angle) const;
};

// Hardware error model. Amplitude damping relaxes toward the excited state
// |0> (the convention here puts the ground state at |1>) and is applied after
// every circuit gate op on each qubit the gate touches (measurement basis
// changes excluded); it requires the density-matrix backend. Readout flips
// are classical and apply to recorded bits only.
struct NoiseConfig {
  double damping_toward_excited = 0.0;  // per-gate per-target, in [0, 1)
  double readout_flip = 0.0;            // per recorded bit, in [0, 0.1]
  OverRotation over_rotation;

  // Throws std::invalid_argument if any parameter is out of range.
  void validate() const;

  bool has_damping() const { return damping_toward_excited > 0.0; }
};

// Rebuilds every tagged rotation gate in the circuit with its over-rotated
// angle. Generic gates (including CNOT and basis changes) pass through.
Circuit with_over_rotation(const Circuit& circuit, const OverRotation& over);

// Kraus pair for amplitude damping toward |0> with probability gamma:
// K0 = diag(1, sqrt(1-gamma)), K1 = sqrt(gamma) |0><1|.
std::vector<std::vector<cdouble>> damping_kraus(double gamma);

// Applies the configured damping channel to one qubit of a density matrix
// and returns the result. Trace is preserved to 1e-10 by construction
// (K0^dag K0 + K1^dag K1 = I). A zero damping rate is the identity.
DensityMatrix apply_noise_channel(const DensityMatrix& rho,
                                  const NoiseConfig& config, int site);

// Mean measured <sigma_z> after preparing |0>, rotating by each angle with
// R_Y, and reading out under the supplied noise model. shots == 0 computes
// the exact channel value instead of sampling.
struct RotationCurve {
  std::vector<double> angles;
  std::vector<double> sigma_z;        // under the noise model
  std::vector<double> sigma_z_ideal;  // noiseless reference cos(angle)
};

RotationCurve rotation_fidelity_curve(const std::vector<double>& angles,
                                      const NoiseConfig& config,
                                      std::uint64_t shots, std::uint64_t seed);

}  // namespace qtherm
