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

#include "qtherm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "qtherm/channel.hpp"
#include "qtherm/rng.hpp"
#include "qtherm/shot_runner.hpp"
#include "qtherm/state_vector.hpp"

namespace qtherm {

namespace {

bool is_single_qubit(ExperimentKind kind) {
  return kind == ExperimentKind::kJarzynskiHadamard ||
         kind == ExperimentKind::kIntermediateMeasurements;
}

void check_def(const ExperimentDef& def) {
  const size_t wanted = is_single_qubit(def.kind) ? 1 : 2;
  if (def.specs.size() != wanted) {
    throw std::invalid_argument("experiment needs one spec per system qubit");
  }
  if (def.kind == ExperimentKind::kIntermediateMeasurements &&
      def.intermediate_steps < 1) {
    throw std::invalid_argument("the drive needs at least one rotation");
  }
  if (def.noise) def.noise->validate();
}

}  // namespace

RecordLayout record_layout(const ExperimentDef& def) {
  check_def(def);
  if (is_single_qubit(def.kind)) {
    // Standard order: initial readout, final readout. Ancilla-assisted order:
    // final readout, then the deferred ancilla readout of the initial state.
    if (def.protocol == Protocol::kStandardTpm) return {{0}, {1}};
    return {{1}, {0}};
  }
  if (def.protocol == Protocol::kStandardTpm) return {{0, 1}, {2, 3}};
  return {{2, 3}, {0, 1}};
}

Circuit build_experiment_circuit(const ExperimentDef& def) {
  check_def(def);
  Circuit circuit;
  if (is_single_qubit(def.kind)) {
    const int sys = 0;
    const int anc = 1;
    for (const Gate& g : build_purification({sys, anc, def.specs[0]})) {
      circuit.push_back(g);
    }
    if (def.protocol == Protocol::kStandardTpm) {
      circuit.push_back(MeasurementOp{{sys}, std::nullopt, true});
    }
    if (def.kind == ExperimentKind::kJarzynskiHadamard) {
      circuit.push_back(gates::hadamard(sys));
    } else {
      const int n = def.intermediate_steps;
      for (int k = 0; k < n; ++k) {
        circuit.push_back(gates::ry(M_PI / n, sys));
        if (k + 1 < n) {
          // Unrecorded sigma_x measurement between consecutive rotations.
          circuit.push_back(MeasurementOp{{sys}, gates::hadamard(sys), false});
        }
      }
    }
    circuit.push_back(MeasurementOp{{sys}, std::nullopt, true});
    if (def.protocol == Protocol::kAatpm) {
      circuit.push_back(MeasurementOp{{anc}, std::nullopt, true});
    }
    return circuit;
  }
  // Engine layout: {0: ancilla 1, 1: system 1, 2: system 2, 3: ancilla 2}.
  for (const Gate& g : build_purification({1, 0, def.specs[0]})) {
    circuit.push_back(g);
  }
  for (const Gate& g : build_purification({2, 3, def.specs[1]})) {
    circuit.push_back(g);
  }
  if (def.protocol == Protocol::kStandardTpm) {
    circuit.push_back(MeasurementOp{{1, 2}, std::nullopt, true});
  }
  if (def.kind == ExperimentKind::kSwapEngine) {
    circuit.push_back(gates::swap_gate(1, 2));
  } else {
    circuit.push_back(MeasurementOp{{1, 2}, gates::singlet_triplet(1, 2), false});
  }
  circuit.push_back(MeasurementOp{{1, 2}, std::nullopt, true});
  if (def.protocol == Protocol::kAatpm) {
    circuit.push_back(MeasurementOp{{0, 3}, std::nullopt, true});
  }
  return circuit;
}

double JointDistribution::prob(int initial, int final_state) const {
  const auto it = probs.find({initial, final_state});
  return it == probs.end() ? 0.0 : it->second;
}

double JointDistribution::entry_error() const {
  return shots == 0 ? 0.0 : 1.0 / std::sqrt(static_cast<double>(shots));
}

void JointDistribution::merge(const JointDistribution& other) {
  if (num_subsystems != other.num_subsystems) {
    throw std::invalid_argument("cannot merge distributions of different arity");
  }
  if (shots == 0 || other.shots == 0) {
    throw std::invalid_argument("cannot merge exact distributions");
  }
  shots += other.shots;
  for (const auto& [label, count] : other.counts) counts[label] += count;
  probs.clear();
  for (const auto& [label, count] : counts) {
    probs[label] =
        static_cast<double>(count) / static_cast<double>(shots);
  }
}

namespace {

void check_layout(const Circuit& circuit, int num_qubits,
                  const RecordLayout& layout, int num_subsystems) {
  validate_circuit(circuit, num_qubits);
  const size_t arity = static_cast<size_t>(num_subsystems);
  if (num_subsystems < 1 || layout.initial_positions.size() != arity ||
      layout.final_positions.size() != arity) {
    throw std::invalid_argument("record layout arity mismatch");
  }
  const int recorded = count_recorded_bits(circuit);
  for (const std::vector<int>* positions :
       {&layout.initial_positions, &layout.final_positions}) {
    for (int p : *positions) {
      if (p < 0 || p >= recorded) {
        throw std::invalid_argument("record layout position out of range");
      }
    }
  }
}

int fold_label(const std::vector<int>& bits, const std::vector<int>& positions) {
  int label = 0;
  for (size_t j = 0; j < positions.size(); ++j) {
    label |= bits[static_cast<size_t>(positions[j])] << j;
  }
  return label;
}

// Exact (initial, final) label probabilities of the circuit, including any
// labels of probability exactly zero.
std::map<std::pair<int, int>, double> exact_label_probs(
    const Circuit& circuit, int num_qubits, const RecordLayout& layout,
    int num_subsystems, const NoiseConfig* noise) {
  check_layout(circuit, num_qubits, layout, num_subsystems);
  const Circuit* run = &circuit;
  Circuit adjusted;
  if (noise != nullptr && noise->over_rotation.epsilon != 0.0) {
    adjusted = with_over_rotation(circuit, noise->over_rotation);
    run = &adjusted;
  }
  const auto bit_probs =
      channel_probabilities(*run, DensityMatrix(num_qubits), noise);
  std::map<std::pair<int, int>, double> label_probs;
  for (const auto& [bits, p] : bit_probs) {
    label_probs[{fold_label(bits, layout.initial_positions),
                 fold_label(bits, layout.final_positions)}] += p;
  }
  return label_probs;
}

}  // namespace

JointDistribution run_tpm_exact(const Circuit& circuit, int num_qubits,
                                const RecordLayout& layout, int num_subsystems,
                                const NoiseConfig* noise) {
  JointDistribution joint;
  joint.num_subsystems = num_subsystems;
  joint.shots = 0;
  joint.probs =
      exact_label_probs(circuit, num_qubits, layout, num_subsystems, noise);
  return joint;
}

JointDistribution sample_from_exact(const JointDistribution& dist,
                                    std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("sampling needs at least one shot");
  }
  if (dist.probs.empty()) {
    throw std::invalid_argument("cannot sample an empty distribution");
  }
  // Cumulative distribution over the labels of nonzero probability. Zero
  // entries never enter, so forbidden outcomes cannot be drawn; the final
  // edge is pinned to 1 (the total is within 1e-10 of it already) so every
  // uniform in [0, 1) lands in a bin.
  std::vector<std::pair<int, int>> labels;
  std::vector<double> edges;
  double cum = 0.0;
  for (const auto& [label, p] : dist.probs) {
    if (p <= 0.0) continue;
    cum += p;
    labels.push_back(label);
    edges.push_back(cum);
  }
  if (edges.empty() || std::abs(cum - 1.0) > 1e-9) {
    throw std::runtime_error("distribution does not sum to 1");
  }
  edges.back() = 1.0;

  std::vector<std::uint64_t> bin_counts(labels.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = shot_uniform(seed, s);
    const size_t bin = static_cast<size_t>(
        std::upper_bound(edges.begin(), edges.end(), u) - edges.begin());
    ++bin_counts[bin];
  }
  JointDistribution joint;
  joint.num_subsystems = dist.num_subsystems;
  joint.shots = shots;
  for (const auto& [label, p] : dist.probs) joint.counts[label] = 0;
  for (size_t b = 0; b < labels.size(); ++b) {
    joint.counts[labels[b]] = bin_counts[b];
  }
  for (const auto& [label, count] : joint.counts) {
    joint.probs[label] =
        static_cast<double>(count) / static_cast<double>(shots);
  }
  return joint;
}

JointDistribution run_tpm_sampling(const Circuit& circuit, int num_qubits,
                                   const RecordLayout& layout,
                                   int num_subsystems, std::uint64_t shots,
                                   std::uint64_t seed,
                                   const NoiseConfig* noise) {
  return sample_from_exact(
      run_tpm_exact(circuit, num_qubits, layout, num_subsystems, noise), shots,
      seed);
}

JointDistribution run_experiment(const ExperimentDef& def) {
  const Circuit circuit = build_experiment_circuit(def);
  const int num_qubits = is_single_qubit(def.kind) ? 2 : 4;
  const int num_subsystems = is_single_qubit(def.kind) ? 1 : 2;
  return run_tpm_sampling(circuit, num_qubits, record_layout(def),
                          num_subsystems, def.shots, def.seed,
                          def.noise ? &*def.noise : nullptr);
}

JointDistribution run_experiment_exact(const ExperimentDef& def) {
  const Circuit circuit = build_experiment_circuit(def);
  const int num_qubits = is_single_qubit(def.kind) ? 2 : 4;
  const int num_subsystems = is_single_qubit(def.kind) ? 1 : 2;
  return run_tpm_exact(circuit, num_qubits, record_layout(def), num_subsystems,
                       def.noise ? &*def.noise : nullptr);
}

EnergyChangeDistribution energy_change_distribution(
    const JointDistribution& joint, const std::vector<QubitSpec>& specs) {
  if (static_cast<int>(specs.size()) != joint.num_subsystems) {
    throw std::invalid_argument("one spec per subsystem required");
  }
  const int s = joint.num_subsystems;
  const int states = 1 << s;
  EnergyChangeDistribution dist;
  dist.num_subsystems = s;
  // One cell per label tuple (a1[, a2]) with aj = nj - mj, ordered with a1
  // descending outermost, matching the joint-probability grid layout.
  std::map<std::pair<int, int>, std::pair<double, int>> cells;
  for (int i = 0; i < states; ++i) {
    for (int f = 0; f < states; ++f) {
      const int a1 = ((i >> 0) & 1) - ((f >> 0) & 1);
      const int a2 = s > 1 ? ((i >> 1) & 1) - ((f >> 1) & 1) : 0;
      auto& cell = cells[{a1, a2}];
      cell.first += joint.prob(i, f);
      cell.second += 1;
    }
  }
  const double unit = joint.entry_error();
  for (int a1 = 1; a1 >= -1; --a1) {
    for (int a2 = (s > 1 ? 1 : 0); a2 >= (s > 1 ? -1 : 0); --a2) {
      const auto it = cells.find({a1, a2});
      if (it == cells.end()) continue;
      dist.cells.push_back({a1 * specs[0].omega,
                            s > 1 ? a2 * specs[1].omega : 0.0,
                            it->second.first, it->second.second * unit});
    }
  }
  return dist;
}

FrEstimate jarzynski_estimator(const EnergyChangeDistribution& dist,
                               double beta_measured) {
  double acc = 0.0;
  for (const EnergyChangeCell& cell : dist.cells) {
    acc += cell.prob * std::exp(-beta_measured * cell.de1);
  }
  return {acc, 0.0, 1};
}

FrEstimate multivariate_fr_estimator(const EnergyChangeDistribution& dist,
                                     double beta1_measured,
                                     double beta2_measured) {
  double acc = 0.0;
  for (const EnergyChangeCell& cell : dist.cells) {
    acc += cell.prob *
           std::exp(-beta1_measured * cell.de1 - beta2_measured * cell.de2);
  }
  return {acc, 0.0, 1};
}

EngineEnergetics engine_energetics(const JointDistribution& joint,
                                   const std::vector<QubitSpec>& specs) {
  if (static_cast<int>(specs.size()) != joint.num_subsystems) {
    throw std::invalid_argument("one spec per subsystem required");
  }
  double de1 = 0.0;
  double de2 = 0.0;
  for (const auto& [label, p] : joint.probs) {
    const auto [i, f] = label;
    de1 += p * (((i >> 0) & 1) - ((f >> 0) & 1)) * specs[0].omega;
    if (joint.num_subsystems > 1) {
      de2 += p * (((i >> 1) & 1) - ((f >> 1) & 1)) * specs[1].omega;
    }
  }
  const double unit = joint.entry_error();
  const double omega2 = joint.num_subsystems > 1 ? specs[1].omega : 0.0;
  return {{de1, 2.0 * specs[0].omega * unit},
          {de2, 2.0 * omega2 * unit},
          {de1 + de2, 2.0 * (specs[0].omega + omega2) * unit}};
}

double population_energy_estimate(const JointDistribution& joint) {
  const StateMarginal init = initial_marginal(joint, 0);
  const StateMarginal fin = final_marginal(joint, 0);
  return ((fin.p0 - fin.p1) - (init.p0 - init.p1)) / 2.0;
}

FrEstimate repeat_for_error(
    const ExperimentDef& def, int repetitions,
    const std::function<double(const JointDistribution&)>& statistic) {
  if (repetitions < 2) {
    throw std::invalid_argument("error estimation needs >= 2 repetitions");
  }
  std::vector<double> values;
  values.reserve(static_cast<size_t>(repetitions));
  for (int j = 0; j < repetitions; ++j) {
    ExperimentDef rep = def;
    rep.seed = derive_stream(def.seed, static_cast<std::uint64_t>(j));
    values.push_back(statistic(run_experiment(rep)));
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(repetitions);
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(repetitions - 1);
  return {mean, std::sqrt(var), repetitions};
}

namespace {

StateMarginal marginal(const JointDistribution& joint, int subsystem,
                       bool initial) {
  if (subsystem < 0 || subsystem >= joint.num_subsystems) {
    throw std::invalid_argument("subsystem index out of range");
  }
  StateMarginal m;
  for (const auto& [label, p] : joint.probs) {
    const int state = initial ? label.first : label.second;
    if ((state >> subsystem) & 1) {
      m.p1 += p;
    } else {
      m.p0 += p;
    }
  }
  return m;
}

}  // namespace

StateMarginal initial_marginal(const JointDistribution& joint, int subsystem) {
  return marginal(joint, subsystem, true);
}

StateMarginal final_marginal(const JointDistribution& joint, int subsystem) {
  return marginal(joint, subsystem, false);
}

namespace {

// Unitary dilation of the damping channel onto a fresh |0> environment qubit:
// |1,0> -> sqrt(1-g)|1,0> + sqrt(g)|0,1> with the orthogonal completion on
// |0,1>; |0,0> and |1,1> are fixed. Tracing out the environment recovers the
// two Kraus operators exactly.
Gate damping_dilation(double gamma, int target, int env) {
  const double keep = std::sqrt(1.0 - gamma);
  const double decay = std::sqrt(gamma);
  return Gate::make({1.0, 0.0, 0.0, 0.0,
                     0.0, keep, -decay, 0.0,
                     0.0, decay, keep, 0.0,
                     0.0, 0.0, 0.0, 1.0},
                    {target, env});
}

}  // namespace

WorkHeatRun run_work_heat_samples(const ExperimentDef& def) {
  check_def(def);
  if (def.kind != ExperimentKind::kJarzynskiHadamard) {
    throw std::invalid_argument(
        "work-heat separation is defined for the Hadamard protocol");
  }
  if (!def.noise || !def.noise->has_damping()) {
    throw std::invalid_argument("work-heat separation needs damping noise");
  }
  if (def.noise->readout_flip != 0.0 ||
      def.noise->over_rotation.epsilon != 0.0) {
    throw std::invalid_argument(
        "work-heat separation supports pure damping noise only");
  }
  if (def.shots < 1) {
    throw std::invalid_argument("sampling needs at least one shot");
  }
  const double gamma = def.noise->damping_toward_excited;
  const QubitSpec& spec = def.specs[0];
  // Qubits: 0 system, 1 ancilla, 2-5 fresh environments, one per damping
  // event (after the prep rotation, after each CNOT leg, after the drive).
  // The recorded readouts use the system directly on both sides of the
  // drive; the extra readout between the drive and its damping event splits
  // dE into work (drive) and heat (damping).
  Circuit circuit;
  circuit.push_back(gates::ry(purification_angle(spec), 1));
  circuit.push_back(damping_dilation(gamma, 1, 2));
  circuit.push_back(gates::cnot(1, 0));
  circuit.push_back(damping_dilation(gamma, 0, 3));
  circuit.push_back(damping_dilation(gamma, 1, 4));
  circuit.push_back(MeasurementOp{{0}, std::nullopt, true});
  circuit.push_back(gates::hadamard(0));
  circuit.push_back(MeasurementOp{{0}, std::nullopt, true});
  circuit.push_back(damping_dilation(gamma, 0, 5));
  circuit.push_back(MeasurementOp{{0}, std::nullopt, true});
  validate_circuit(circuit, 6);

  WorkHeatRun run;
  run.samples.reserve(def.shots);
  std::uint64_t initial_ones = 0;
  for (std::uint64_t s = 0; s < def.shots; ++s) {
    StateVector psi(6);
    ShotRng rng(derive_stream(def.seed, s));
    const OutcomeRecord record = run_shot(circuit, psi, rng);
    const int n = record[0].bit;
    const int mid = record[1].bit;
    const int m = record[2].bit;
    run.samples.push_back(
        {spec.omega * (n - mid), spec.omega * (mid - m)});
    initial_ones += static_cast<std::uint64_t>(n);
  }
  const double p1 =
      static_cast<double>(initial_ones) / static_cast<double>(def.shots);
  if (initial_ones == 0 || initial_ones == def.shots) {
    // Degenerate sampled marginal; fall back to the nominal temperature.
    run.beta_measured = spec.beta;
  } else {
    run.beta_measured = measured_beta(1.0 - p1, p1, spec.omega);
  }
  return run;
}

}  // namespace qtherm
