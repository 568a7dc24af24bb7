// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "cohsim/ensemble.hpp"
#include "cohsim/state.hpp"

namespace cohsim {

// Product state with every qubit on the spin-coherent equator:
// each qubit n becomes (|0> + exp(i theta_n)|1>) / sqrt(2).
QuantumState prepare_coherent(int n_qubits, const std::vector<double>& thetas);

// Uniform phase profile shorthand.
QuantumState prepare_coherent(int n_qubits, double theta = 0.0);

// Collective spin value of Hamming weight w on n qubits: (n - 2w) / 2,
// with |0> counting as spin up (+1/2).
double sz_of_weight(int n_qubits, int w);

// Projects onto the collective S_z = s sector and renormalizes.  s must be on
// the sector grid (integer for even n, half-integer for odd n; in particular
// s = 0 requires even n).  Throws std::invalid_argument off-grid and
// std::runtime_error if the sector carries no weight.
QuantumState project_sz(const QuantumState& state, double s);

// Decomposes into the mixture of all populated S_z sectors (coherences
// between sectors removed).  Members ordered by descending s.
StateEnsemble dephase_sz(const QuantumState& state);

// Mixture of n_samples coherent states with a common uniformly random phase
// theta_m per member (weight 1/n_samples each).
StateEnsemble random_global_phase_ensemble(int n_qubits, int n_samples,
                                           std::uint64_t seed);

// Fully dephased single-qubit limit: uniform mixture over all computational
// basis states.  Exhaustive (2^n members); intended for n <= 12 or so.
StateEnsemble prepare_noisy(int n_qubits);

// Monte Carlo variant: n_samples uniformly drawn basis states.
StateEnsemble prepare_noisy(int n_qubits, int n_samples, std::uint64_t seed);

}  // namespace cohsim
