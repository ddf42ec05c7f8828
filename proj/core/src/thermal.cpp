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

#include "qtherm/thermal.hpp"

#include <cmath>
#include <stdexcept>

namespace qtherm {

double purification_angle(double beta_omega) {
  return 2.0 * std::atan(std::exp(beta_omega / 2.0));
}

double purification_angle(const QubitSpec& spec) {
  return purification_angle(spec.beta * spec.omega);
}

double nominal_beta_omega(double phi) {
  if (phi <= 0.0 || phi >= M_PI) {
    throw std::invalid_argument("purification angle must lie in (0, pi)");
  }
  return 2.0 * std::log(std::tan(phi / 2.0));
}

std::vector<Gate> build_purification(const PurificationPair& pair) {
  if (pair.system == pair.ancilla) {
    throw std::invalid_argument("system and ancilla must differ");
  }
  if (pair.spec.omega <= 0.0) {
    throw std::invalid_argument("omega must be positive");
  }
  const double phi = purification_angle(pair.spec);
  return {gates::ry(phi, pair.ancilla), gates::cnot(pair.ancilla, pair.system)};
}

double measured_beta(double p0, double p1, double omega) {
  if (omega <= 0.0) {
    throw std::invalid_argument("omega must be positive");
  }
  if (p0 <= 0.0 || p1 <= 0.0) {
    throw std::invalid_argument(
        "temperature undefined (pure state): a level has zero population");
  }
  if (std::abs(p0 + p1 - 1.0) > 1e-9) {
    throw std::invalid_argument("populations must sum to 1");
  }
  return std::log(p1 / p0) / omega;
}

GibbsPopulations gibbs_populations(double beta_omega) {
  // p1 = e^{b/2}/Z and p0 = e^{-b/2}/Z in overflow-safe forms.
  return {1.0 / (1.0 + std::exp(beta_omega)),
          1.0 / (1.0 + std::exp(-beta_omega))};
}

}  // namespace qtherm
