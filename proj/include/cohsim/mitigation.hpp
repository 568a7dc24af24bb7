// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cohsim/counting.hpp"
#include "cohsim/sampling.hpp"

namespace cohsim {

// Uncorrelated per-qubit readout confusion.  For qubit q, p00[q] is the
// probability of reading 0 given true 0 and p11[q] of reading 1 given true 1,
// i.e. the per-qubit column-stochastic matrix
//   [[p00, 1 - p11], [1 - p00, p11]].
struct ConfusionModel {
  std::vector<double> p00;
  std::vector<double> p11;
};

int model_qubits(const ConfusionModel& model);
void check_valid(const ConfusionModel& model);

ConfusionModel uniform_confusion(int n_qubits, double p00, double p11);

// JSON: {"0": {"p00": ..., "p11": ...}, "1": {...}, ...} keyed by qubit.
// A top-level "meta" entry, if present, is ignored on load.
std::string confusion_to_json(const ConfusionModel& model);
ConfusionModel confusion_from_json(const std::string& text);

// Exact action of the confusion channel: the histogram (as a dense vector
// over bit patterns) is multiplied by the tensor product of the per-qubit
// matrices.  Weight totals are preserved.
OutcomeHistogram apply_readout_noise(const OutcomeHistogram& hist,
                                     const ConfusionModel& model);

// Stochastic action: every shot's bits are flipped independently with the
// model's error probabilities (histogram weights must be integer counts).
OutcomeHistogram apply_readout_noise_sampled(const OutcomeHistogram& hist,
                                             const ConfusionModel& model,
                                             std::uint64_t seed);

// Inverse channel, factor-wise per qubit.  Entries may leave [0, 1]; the
// result is flagged mitigated and totals are preserved.  Throws
// std::runtime_error when a qubit block is singular (p00 + p11 = 1).
OutcomeHistogram mitigate(const OutcomeHistogram& hist,
                          const ConfusionModel& model);

// Restricts the model to the listed qubits (for mitigating a histogram over
// a bit subset, e.g. system bits after ancilla post-selection).
ConfusionModel submodel(const ConfusionModel& model,
                        const std::vector<int>& qubits);

// A readout channel with hidden truth: prepares a basis pattern, reads it
// out n_shots times through the confusion channel.
struct SimulatedReadoutDevice {
  ConfusionModel truth;
  OutcomeHistogram read(std::uint64_t prepared_bits, std::uint64_t n_shots,
                        std::uint64_t seed) const;
};

// Estimates the model from two alternating-pattern calibration runs
// (0101... and 1010...), n_shots each.
ConfusionModel calibrate(const SimulatedReadoutDevice& device,
                         std::uint64_t n_shots, std::uint64_t seed);

// Shot-sampled staged-coupling sweep executed through a noisy readout
// channel.  Per (k, theta) the protocol histogram is sampled, readout errors
// are injected stochastically, and (optionally) the calibrated model is
// inverted -- either on the full register before the ancilla post-selection
// or on the system-bit marginal after it.  The model covers classical slots
// in circuit order: system bits 0..n-1, then the ancilla bits.
struct NoisySweepOptions {
  std::uint64_t n_shots = 1000;
  std::uint64_t seed = 0;
  int theta_grid_points = 64;
  bool mitigate = false;
  bool mitigate_before_postselect = true;
};

std::vector<SweepPoint> noisy_staged_sweep(const CountingPlan& plan,
                                           const ConfusionModel& model,
                                           const NoisySweepOptions& options);

}  // namespace cohsim
