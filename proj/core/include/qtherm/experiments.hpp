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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "qtherm/analytics.hpp"
#include "qtherm/circuit.hpp"
#include "qtherm/noise.hpp"
#include "qtherm/thermal.hpp"

namespace qtherm {

// How the initial energy eigenstate is learned. The standard scheme measures
// the system directly before the drive; the ancilla-assisted scheme defers to
// the purification ancilla, whose bit is perfectly correlated with the
// system's pre-drive state, and reads it out at the end. Both schemes yield
// identical joint statistics for the protocols here.
enum class Protocol { kStandardTpm, kAatpm };

enum class ExperimentKind {
  kJarzynskiHadamard,        // single qubit, Hadamard drive
  kIntermediateMeasurements, // single qubit, N R_Y(pi/N) with sigma_x breaks
  kSwapEngine,               // two Gibbs qubits, full SWAP stroke
  kQmcEngine,                // two Gibbs qubits, singlet-triplet measurement
};

struct ExperimentDef {
  ExperimentKind kind = ExperimentKind::kJarzynskiHadamard;
  Protocol protocol = Protocol::kAatpm;
  int intermediate_steps = 1;  // N, used by kIntermediateMeasurements only
  std::vector<QubitSpec> specs;
  std::uint64_t shots = 8192;
  std::uint64_t seed = 0;
  std::optional<NoiseConfig> noise;
};

// Positions of the initial-state and final-state bits inside a full outcome
// record, in subsystem order (system 1 first). For two-qubit engines the
// joint state label is n1 + 2 * n2.
struct RecordLayout {
  std::vector<int> initial_positions;
  std::vector<int> final_positions;
};

RecordLayout record_layout(const ExperimentDef& def);

// Full gate/measurement sequence for the experiment, including state
// preparation. Qubit layout: single-qubit runs use {0: system, 1: ancilla};
// engine runs use {0: ancilla 1, 1: system 1, 2: system 2, 3: ancilla 2}.
Circuit build_experiment_circuit(const ExperimentDef& def);

// Histogram over (initial state, final state) pairs. shots == 0 marks an
// exact distribution (probs only, counts empty).
struct JointDistribution {
  int num_subsystems = 1;
  std::uint64_t shots = 0;
  std::map<std::pair<int, int>, std::uint64_t> counts;
  std::map<std::pair<int, int>, double> probs;

  double prob(int initial, int final_state) const;
  // Statistical error of a single entry: 1/sqrt(shots), 0 for exact runs.
  double entry_error() const;
  void merge(const JointDistribution& other);
};

// Monte Carlo estimate: computes the exact outcome law of the circuit once
// (channel backend, including any configured noise) and draws def.shots
// independent samples from it, one derived RNG stream per shot. This is
// distributionally identical to stepping the statevector shot by shot -- a
// recorded-bit string is drawn with exactly its channel probability, and
// forbidden outcomes keep probability zero -- while staying fast enough for
// full temperature sweeps at paper-scale repetition counts.
JointDistribution run_experiment(const ExperimentDef& def);

// Exact distribution from the density-matrix channel.
JointDistribution run_experiment_exact(const ExperimentDef& def);

// Draws `shots` independent samples from the probability law of `dist` (one
// derived uniform per shot index). Labels of probability zero are never
// drawn. Sweeps call this directly to reuse one exact channel evaluation
// across many repetitions; run_experiment is equivalent to sampling from
// run_experiment_exact.
JointDistribution sample_from_exact(const JointDistribution& dist,
                                    std::uint64_t shots, std::uint64_t seed);

// Lower-level entry points running a caller-supplied circuit whose recorded
// bits follow `layout`. Used by tests to probe custom drives.
JointDistribution run_tpm_sampling(const Circuit& circuit, int num_qubits,
                                   const RecordLayout& layout,
                                   int num_subsystems, std::uint64_t shots,
                                   std::uint64_t seed,
                                   const NoiseConfig* noise = nullptr);
JointDistribution run_tpm_exact(const Circuit& circuit, int num_qubits,
                                const RecordLayout& layout, int num_subsystems,
                                const NoiseConfig* noise = nullptr);

// Distribution of per-subsystem energy changes implied by a joint
// distribution and the qubit frequencies. For a bit going n -> m the energy
// change is (n - m) * omega under H = (omega/2) sigma_z.
struct EnergyChangeCell {
  double de1 = 0.0;
  double de2 = 0.0;  // zero for single-qubit experiments
  double prob = 0.0;
  double error = 0.0;
};

struct EnergyChangeDistribution {
  int num_subsystems = 1;
  std::vector<EnergyChangeCell> cells;
};

EnergyChangeDistribution energy_change_distribution(
    const JointDistribution& joint, const std::vector<QubitSpec>& specs);

// Scalar fluctuation-relation estimate with its repetition statistics.
// Single evaluations carry repetitions = 1 and std_error = 0; repeat_for_error
// fills in the spread over independent repetitions.
struct FrEstimate {
  double value = 0.0;
  double std_error = 0.0;
  int repetitions = 1;
};

// <e^{-beta W}> over the distribution, with W = dE1 and beta the measured
// inverse temperature. Both fluctuation averages equal 1 exactly for the
// protocols here; the two-qubit form is <e^{-beta1 dE1 - beta2 dE2}>.
FrEstimate jarzynski_estimator(const EnergyChangeDistribution& dist,
                               double beta_measured);
FrEstimate multivariate_fr_estimator(const EnergyChangeDistribution& dist,
                                     double beta1_measured,
                                     double beta2_measured);

// Mean energy changes and work from an engine run, with statistical errors
// sigma[<dEj>] = 2 omegaj / sqrt(shots), sigma[<W>] = 2 (omega1 + omega2) /
// sqrt(shots).
struct EngineEnergetics {
  Measured de1;
  Measured de2;
  Measured work;
};

EngineEnergetics engine_energetics(const JointDistribution& joint,
                                   const std::vector<QubitSpec>& specs);

// Population-difference estimator of <dE1>/omega1 for the engine: half the
// drop of the excited-state imbalance of system 1 across the stroke.
double population_energy_estimate(const JointDistribution& joint);

// Repeats an experiment k times with derived seeds (repetition j runs with
// seed derive_stream(def.seed, j)) and returns the mean and sample standard
// deviation of a scalar statistic. Requires k >= 2.
FrEstimate repeat_for_error(
    const ExperimentDef& def, int repetitions,
    const std::function<double(const JointDistribution&)>& statistic);

// Per-subsystem marginals of the initial (pre-drive) and final (post-drive)
// states, used to compute measured inverse temperatures.
struct StateMarginal {
  double p0 = 0.0;
  double p1 = 0.0;
};

StateMarginal initial_marginal(const JointDistribution& joint, int subsystem);
StateMarginal final_marginal(const JointDistribution& joint, int subsystem);

// Work and heat separation for the single-qubit Hadamard protocol under
// damping. Every damping event is dilated onto a fresh environment qubit so
// the run stays pure, and an extra recorded readout between the drive and
// its damping splits the two-point energy change into work W (from the
// drive) and heat Q (from the in-window damping). The insertion is exact:
// both damping Kraus operators are monomial, so downstream populations only
// depend on populations and the mid readout perturbs nothing. The returned
// measured beta comes from the initial-bit marginal of the same run.
// Requires a damping noise model; throws std::invalid_argument otherwise.
struct WorkHeatRun {
  std::vector<WorkHeatSample> samples;
  double beta_measured = 0.0;
};

WorkHeatRun run_work_heat_samples(const ExperimentDef& def);

}  // namespace qtherm
