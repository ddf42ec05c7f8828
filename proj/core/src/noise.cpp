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

#include "qtherm/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "qtherm/channel.hpp"
#include "qtherm/rng.hpp"

namespace qtherm {

double OverRotation::adjusted(double angle) const {
  if (epsilon == 0.0) return angle;
  return angle * (1.0 + epsilon * std::pow(std::abs(angle) / M_PI, power));
}

void NoiseConfig::validate() const {
  if (!(damping_toward_excited >= 0.0) || damping_toward_excited >= 1.0) {
    throw std::invalid_argument("noise.damping must lie in [0, 1)");
  }
  if (!(readout_flip >= 0.0) || readout_flip > 0.1) {
    throw std::invalid_argument("noise.readout_flip must lie in [0, 0.1]");
  }
  if (!std::isfinite(over_rotation.epsilon)) {
    throw std::invalid_argument("noise.over_rotation must be finite");
  }
  if (!(over_rotation.power >= 0.0)) {
    throw std::invalid_argument("noise.over_rotation_power must be >= 0");
  }
}

Circuit with_over_rotation(const Circuit& circuit, const OverRotation& over) {
  if (over.epsilon == 0.0) return circuit;
  Circuit out;
  out.reserve(circuit.size());
  for (const CircuitOp& op : circuit) {
    const Gate* g = std::get_if<Gate>(&op);
    if (g == nullptr || g->kind == GateKind::kGeneric) {
      out.push_back(op);
      continue;
    }
    const double angle = over.adjusted(g->angle);
    out.push_back(g->kind == GateKind::kRotationX
                      ? gates::rx(angle, g->targets[0])
                      : gates::ry(angle, g->targets[0]));
  }
  return out;
}

std::vector<std::vector<cdouble>> damping_kraus(double gamma) {
  if (gamma < 0.0 || gamma >= 1.0) {
    throw std::invalid_argument("damping probability must lie in [0, 1)");
  }
  return {{1.0, 0.0, 0.0, std::sqrt(1.0 - gamma)},
          {0.0, std::sqrt(gamma), 0.0, 0.0}};
}

DensityMatrix apply_noise_channel(const DensityMatrix& rho,
                                  const NoiseConfig& config, int site) {
  config.validate();
  if (!config.has_damping()) return rho;
  DensityMatrix out = rho;
  out.apply_kraus_1q(damping_kraus(config.damping_toward_excited), site);
  return out;
}

RotationCurve rotation_fidelity_curve(const std::vector<double>& angles,
                                      const NoiseConfig& config,
                                      std::uint64_t shots,
                                      std::uint64_t seed) {
  config.validate();
  RotationCurve curve;
  curve.angles = angles;
  curve.sigma_z.reserve(angles.size());
  curve.sigma_z_ideal.reserve(angles.size());
  for (size_t i = 0; i < angles.size(); ++i) {
    const double alpha = angles[i];
    Circuit circuit;
    circuit.push_back(gates::ry(alpha, 0));
    circuit.push_back(MeasurementOp{{0}, std::nullopt, true});
    circuit = with_over_rotation(circuit, config.over_rotation);
    const auto probs =
        channel_probabilities(circuit, DensityMatrix(1), &config);
    const double p0 = probs.at({0});
    if (shots == 0) {
      curve.sigma_z.push_back(2.0 * p0 - 1.0);
    } else {
      const std::uint64_t angle_seed = derive_stream(seed, i);
      std::uint64_t zeros = 0;
      for (std::uint64_t s = 0; s < shots; ++s) {
        if (shot_uniform(angle_seed, s) < p0) ++zeros;
      }
      const double f0 = static_cast<double>(zeros) / static_cast<double>(shots);
      curve.sigma_z.push_back(2.0 * f0 - 1.0);
    }
    curve.sigma_z_ideal.push_back(std::cos(alpha));
  }
  return curve;
}

}  // namespace qtherm
