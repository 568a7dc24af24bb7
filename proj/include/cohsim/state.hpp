// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace cohsim {

using cplx = std::complex<double>;

// Dense state vector over n_qubits qubits.  Amplitude index i encodes the
// computational basis state whose qubit q holds bit (i >> q) & 1, i.e. qubit 0
// is the least significant bit of the index (little-endian).
struct QuantumState {
  int n_qubits = 0;
  std::vector<cplx> amplitudes;
};

// |00...0> on n_qubits qubits.
QuantumState zero_state(int n_qubits);

// Basis state |bits> (bit of qubit q taken from (bits >> q) & 1).
QuantumState basis_state(int n_qubits, std::uint64_t bits);

double norm_sq(const QuantumState& state);

// Rescales to unit norm.  Throws std::runtime_error on (near-)zero vectors.
void normalize(QuantumState& state);

// <a|b>.  Dimensions must match.
cplx overlap(const QuantumState& a, const QuantumState& b);

// |<a|b>| (phase-insensitive).
double fidelity(const QuantumState& a, const QuantumState& b);

// Multiplies every amplitude by exp(i*phase).
void apply_global_phase(QuantumState& state, double phase);

// Reorders qubits: qubit wire_of_new[q] of the input becomes qubit q of the
// output.  wire_of_new must be a permutation of 0..n_qubits-1.
QuantumState permute_qubits(const QuantumState& state,
                            const std::vector<int>& wire_of_new);

// Keeps only the qubits listed in keep (in the given order, becoming qubits
// 0,1,... of the result).  Every dropped wire w must be in the definite state
// given by bit w of dropped_bits; throws std::runtime_error if leftover
// weight on other branches exceeds 1e-12 of the total.  Used to strip
// ancilla wires after post-selection.
QuantumState extract_qubits(const QuantumState& state,
                            const std::vector<int>& keep,
                            std::uint64_t dropped_bits = 0);

// Throws std::invalid_argument on inconsistent sizes or non-finite entries.
void check_valid(const QuantumState& state);

}  // namespace cohsim
