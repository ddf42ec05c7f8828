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

#include "qtherm/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qtherm {

namespace {

constexpr double kBranchPrune = 1e-15;
constexpr int kMaxRecordedBits = 16;

struct Branch {
  DensityMatrix rho;
  double prob;
  std::vector<int> bits;
};

}  // namespace

std::map<std::vector<int>, double> channel_probabilities(
    const Circuit& circuit, const DensityMatrix& initial,
    const NoiseConfig* noise) {
  const int n = initial.num_qubits();
  validate_circuit(circuit, n);
  const int recorded = count_recorded_bits(circuit);
  if (recorded > kMaxRecordedBits) {
    throw std::invalid_argument("circuit records more than 16 bits");
  }
  const double gamma = noise != nullptr ? noise->damping_toward_excited : 0.0;
  const double flip = noise != nullptr ? noise->readout_flip : 0.0;
  const std::vector<std::vector<cdouble>> kraus =
      gamma > 0.0 ? damping_kraus(gamma) : std::vector<std::vector<cdouble>>{};

  std::vector<Branch> branches;
  branches.push_back({initial, 1.0, {}});
  for (const CircuitOp& op : circuit) {
    if (const Gate* g = std::get_if<Gate>(&op)) {
      for (Branch& b : branches) {
        b.rho.apply(*g);
        if (gamma > 0.0) {
          for (int t : g->targets) b.rho.apply_kraus_1q(kraus, t);
        }
      }
      continue;
    }
    const MeasurementOp& m = std::get<MeasurementOp>(op);
    if (m.basis_change) {
      for (Branch& b : branches) b.rho.apply(*m.basis_change);
    }
    for (int t : m.targets) {
      if (m.record) {
        std::vector<Branch> next;
        next.reserve(branches.size() * 2);
        for (Branch& b : branches) {
          for (int bit = 0; bit < 2; ++bit) {
            const double p = b.rho.probability_of_bit(t, bit);
            const double child_prob = b.prob * p;
            if (child_prob <= kBranchPrune) continue;
            Branch child{b.rho, child_prob, b.bits};
            child.rho.project_z(t, bit);
            child.bits.push_back(bit);
            next.push_back(std::move(child));
          }
        }
        branches = std::move(next);
      } else {
        // Discarded outcome: keep both populations, erase coherences.
        for (Branch& b : branches) b.rho.dephase_z(t);
      }
    }
    if (m.basis_change) {
      const Gate undo = adjoint(*m.basis_change);
      for (Branch& b : branches) b.rho.apply(undo);
    }
  }

  // Every string over the recorded alphabet appears, pruned ones as zero.
  std::map<std::vector<int>, double> result;
  std::vector<int> key(recorded, 0);
  for (long long s = 0; s < (1LL << recorded); ++s) {
    for (int i = 0; i < recorded; ++i) key[i] = (s >> i) & 1;
    result[key] = 0.0;
  }
  for (const Branch& b : branches) result[b.bits] += b.prob;

  if (flip > 0.0) {
    // Classical readout confusion, one bit position at a time:
    // P'(.., y_i, ..) = (1-f) P(.., y_i, ..) + f P(.., 1-y_i, ..).
    for (int i = 0; i < recorded; ++i) {
      std::map<std::vector<int>, double> mixed = result;
      for (auto& [bits, p] : mixed) {
        std::vector<int> other = bits;
        other[i] ^= 1;
        p = (1.0 - flip) * result[bits] + flip * result[other];
      }
      result = std::move(mixed);
    }
  }

  double total = 0.0;
  for (const auto& [bits, p] : result) total += p;
  if (std::abs(total - 1.0) > 1e-10) {
    throw std::runtime_error("channel probabilities do not sum to 1");
  }
  return result;
}

}  // namespace qtherm
