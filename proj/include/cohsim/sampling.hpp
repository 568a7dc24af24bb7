// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>

#include "cohsim/circuit.hpp"
#include "cohsim/state.hpp"

namespace cohsim {

// Histogram over classical bit patterns.  Keys pack slot s into bit s of the
// integer (slot 0 = least significant bit).  For shot histograms the values
// are counts summing to n_shots; for exact histograms (n_shots == 0) they are
// probabilities summing to 1.  Readout mitigation may drive entries negative;
// `mitigated` records that the histogram left the simplex on purpose.
struct OutcomeHistogram {
  int n_bits = 0;
  std::uint64_t n_shots = 0;
  std::uint64_t seed = 0;
  bool mitigated = false;
  std::map<std::uint64_t, double> weights;
};

// Renders a key as a bitstring with slot 0 leftmost ("0110...").
std::string bitstring(std::uint64_t key, int n_bits);
std::uint64_t key_from_bitstring(const std::string& bits);

double histogram_total(const OutcomeHistogram& hist);

// JSON round trip: {"n_bits":, "n_shots":, "seed":, "mitigated":,
// "counts": {"0101": weight, ...}} with slot-0-leftmost bitstring keys.
std::string histogram_to_json(const OutcomeHistogram& hist);
OutcomeHistogram histogram_from_json(const std::string& text);

// Deterministic per-shot RNG stream: the generator for shot i depends only on
// (seed, i), so results are independent of evaluation order.
std::mt19937_64 shot_rng(std::uint64_t seed, std::uint64_t shot);

// Uniform double in [0, 1) from the top 53 bits of the next output
// (bit-for-bit reproducible across standard library implementations).
double uniform01(std::mt19937_64& rng);

// Measures qubit q: returns (outcome bit, collapsed normalized state).  The
// outcome is drawn from shot_rng(seed, 0).
std::pair<int, QuantumState> measure_qubit(const QuantumState& state, int q,
                                           std::uint64_t seed);

// Projects qubit q onto `bit` without removing the wire.  Returns (branch
// probability, renormalized state).  Throws std::runtime_error("impossible
// branch ...") if the probability is below 1e-15.
std::pair<double, QuantumState> postselect(const QuantumState& state, int q,
                                           int bit);

// Runs the circuit once, then draws n_shots samples of the measured slots.
// Shot i uses shot_rng(seed, i).  Requires n_shots > 0 and at least one
// measurement.  The optional initial state overrides |0...0>.
OutcomeHistogram sample_shots(const Circuit& circuit, std::uint64_t n_shots,
                              std::uint64_t seed);
OutcomeHistogram sample_shots(const Circuit& circuit,
                              const QuantumState& initial,
                              std::uint64_t n_shots, std::uint64_t seed);

// Exact measurement distribution of the circuit's slots (n_shots == 0).
OutcomeHistogram exact_histogram(const Circuit& circuit);
OutcomeHistogram exact_histogram(const Circuit& circuit,
                                 const QuantumState& initial);

// Probability vector over slot keys (length 2^n_slots) for a prepared state.
std::vector<double> slot_probabilities(const QuantumState& state,
                                       const std::vector<Measurement>& slots);

}  // namespace cohsim
