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

#include <array>
#include <vector>

#include "qtherm/gates.hpp"
#include "qtherm/thermal.hpp"

namespace qtherm {

// Closed-form reference results the simulator is validated against. Every
// function here is independent of the circuit machinery: pure arithmetic on
// the model parameters.

// Two-point energy statistics of a Hadamard drive on a Gibbs qubit.
// W = E_final - E_initial takes values {+omega, -omega, 0} with
// P_plus = p1/2, P_minus = p0/2, P_zero = 1/2, and <e^{-beta W}> = 1 exactly.
struct WorkStatistics {
  double p_plus;
  double p_minus;
  double p_zero;
};

WorkStatistics hadamard_work_statistics(double beta_omega);

// Conditional transition probabilities p(m|n) of the interrupted drive: N
// rotations R_Y(pi/N) with an unrecorded sigma_x measurement between each
// consecutive pair (N - 1 of them). By symmetry p(0|0) = p(1|1) and
// p(0|1) = p(1|0), so two numbers suffice.
struct TransitionPair {
  double p_same;  // p(0|0) = p(1|1)
  double p_flip;  // p(0|1) = p(1|0)
};

// Stable closed form: with c = cos(pi/N) and s2 = sin^2(pi/N),
// p_same = (1 - c^{N-2} s2) / 2 and p_flip = (1 + c^{N-2} s2) / 2 for N >= 2;
// N = 1 is an uninterrupted R_Y(pi), giving {0, 1}. Converges to {1/2, 1/2}
// as N grows: frequent measurement randomizes the qubit completely.
TransitionPair intermediate_pmn(int num_rotations);

// Transition matrix p[final][initial] of the same chain for an arbitrary
// single-qubit drive U and a two-outcome observable given by its basis
// change V (the observable's eigenstates are V^dag |0>, V^dag |1>). Built as
// a product of elementary stochastic matrices |<a'|V U V^dag|a>|^2 with the
// first and last segments lacking one basis change. Rows index the final
// z outcome. Used as an independent cross-check of intermediate_pmn.
using TransitionMatrix = std::array<std::array<double, 2>, 2>;

TransitionMatrix chain_pmn(int num_rotations, const Gate& drive,
                           const Gate& basis_change);

// Joint probabilities P_ab over per-qubit energy-change labels a, b in
// {+1, 0, -1} (a = initial bit - final bit). Stored row-major with
// index = (1 - a) * 3 + (1 - b).
struct PabGrid {
  std::array<double, 9> p{};

  static int index(int a, int b);
  double at(int a, int b) const { return p[static_cast<size_t>(index(a, b))]; }
  double& at(int a, int b) { return p[static_cast<size_t>(index(a, b))]; }
};

// Full-SWAP engine between Gibbs qubits with bj = betaj * omegaj and
// Zj = 2 cosh(bj / 2): P_00 = 2 cosh((b1 + b2)/2) / (Z1 Z2),
// P_-+ = e^{-(b1-b2)/2} / (Z1 Z2), P_+- = e^{+(b1-b2)/2} / (Z1 Z2), all
// other entries exactly zero (the SWAP permutation forbids them).
PabGrid swap_joint_probabilities(double b1, double b2);

// Engine driven by an unrecorded singlet-triplet measurement instead of the
// SWAP: the measurement erases the coherence between |01> and |10>, leaving
// a half-strength exchange (|01> -> |01> or |10> with probability 1/2 each).
// Off-diagonal entries are half the SWAP values; P_00 absorbs the rest.
PabGrid qmc_joint_probabilities(double b1, double b2);

// Mean energy changes and work for either engine. With the population
// imbalance F = 1/(1+e^{b2}) - 1/(1+e^{b1}), the SWAP engine moves
// <dE1> = F omega1, <dE2> = -F omega2, <W> = F (omega1 - omega2); the
// measurement engine moves exactly half of each.
struct Energetics {
  double de1;
  double de2;
  double work;
};

Energetics swap_energetics(double b1, double b2, double omega1, double omega2);
Energetics qmc_energetics(double b1, double b2, double omega1, double omega2);

// Operating regimes of a two-qubit thermal machine, judged from the signs of
// the mean energy change of the cold qubit, of the hot qubit, and of the
// work done on the pair.
enum class ModeLabel {
  kRefrigerator,
  kHeatEngine,
  kThermalAccelerator,
  kHeater,
  kUndetermined,
};

// Stable lowercase names used in reports: "refrigerator", "heat-engine",
// "thermal-accelerator", "heater", "undetermined".
const char* mode_label_name(ModeLabel label);

struct Measured {
  double value = 0.0;
  double sigma = 0.0;
};

// Sign-based classification with the cold qubit defined by the larger beta:
//   heat engine:         dE_cold > 0, dE_hot < 0, W < 0
//   refrigerator:        dE_cold < 0, dE_hot > 0, W > 0
//   thermal accelerator: dE_cold > 0, dE_hot < 0, W > 0
//   heater:              dE_cold > 0 and dE_hot > 0 (W not consulted)
// Undetermined when beta1 == beta2, when any deciding quantity lies within
// its one-sigma error of zero, or when no pattern matches. Invariant under
// simultaneous positive rescaling of all values and errors.
ModeLabel classify_mode(const Measured& de1, const Measured& de2,
                        const Measured& work, double beta1, double beta2);

// Noiseless mode at every point of a square grid of (b1, b2) = (beta1 omega1,
// beta2 omega2) values in (0, range]^2 (grid_points per axis, zero excluded),
// using exact SWAP energetics with zero error bars. labels is row-major with
// b2 varying fastest; fractions is indexed by ModeLabel order.
struct PhaseDiagram {
  int grid_points = 0;
  double range = 0.0;
  std::vector<ModeLabel> labels;
  std::array<double, 5> fractions{};
};

PhaseDiagram theoretical_phase_diagram(double omega1, double omega2,
                                       int grid_points, double range);

// First-order prediction for a Jarzynski average whose trajectories also
// absorb heat Q from an environment: <e^{-beta(W+Q)}> ~ 1 - beta <Q e^{-beta W}>.
// mean_q is the plain sample mean of Q; the expansion is only trusted while
// |beta * mean_q| < 0.3, reported through within_validity.
struct WorkHeatSample {
  double work;
  double heat;
};

struct HeatLeakPrediction {
  double value;
  bool within_validity;
};

HeatLeakPrediction heat_leak_expansion(
    double beta, double mean_q, const std::vector<WorkHeatSample>& samples);

}  // namespace qtherm
