// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "cohsim/states.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cohsim/sampling.hpp"

namespace cohsim {

QuantumState prepare_coherent(int n_qubits,
                              const std::vector<double>& thetas) {
  if (static_cast<int>(thetas.size()) != n_qubits) {
    throw std::invalid_argument("need one theta per qubit");
  }
  QuantumState state = zero_state(n_qubits);
  const double scale = std::pow(0.5, n_qubits / 2.0);
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    double phase = 0.0;
    for (int q = 0; q < n_qubits; ++q) {
      if ((i >> q) & 1u) phase += thetas[q];
    }
    state.amplitudes[i] = std::polar(scale, phase);
  }
  return state;
}

QuantumState prepare_coherent(int n_qubits, double theta) {
  return prepare_coherent(n_qubits, std::vector<double>(n_qubits, theta));
}

double sz_of_weight(int n_qubits, int w) {
  return 0.5 * (n_qubits - 2 * w);
}

namespace {
// Hamming weight of the sector with collective spin s, or -1 if s is not on
// the sector grid of n qubits.
int weight_of_sz(int n_qubits, double s) {
  const double w_real = n_qubits / 2.0 - s;
  const double w_round = std::round(w_real);
  if (std::abs(w_real - w_round) > 1e-9) return -1;
  const int w = static_cast<int>(w_round);
  if (w < 0 || w > n_qubits) return -1;
  return w;
}
}  // namespace

QuantumState project_sz(const QuantumState& state, double s) {
  check_valid(state);
  const int w = weight_of_sz(state.n_qubits, s);
  if (w < 0) {
    if (s == 0.0 && state.n_qubits % 2 == 1) {
      throw std::invalid_argument(
          "s = 0 sector requires an even qubit count");
    }
    throw std::invalid_argument("s is not on the sector grid");
  }
  QuantumState out = state;
  double kept = 0.0;
  for (std::size_t i = 0; i < out.amplitudes.size(); ++i) {
    if (std::popcount(i) == w) {
      kept += std::norm(out.amplitudes[i]);
    } else {
      out.amplitudes[i] = cplx{0.0, 0.0};
    }
  }
  if (kept < 1e-15) {
    throw std::runtime_error("sector carries no weight");
  }
  const double inv = 1.0 / std::sqrt(kept);
  for (cplx& a : out.amplitudes) a *= inv;
  return out;
}

StateEnsemble dephase_sz(const QuantumState& state) {
  check_valid(state);
  const int n = state.n_qubits;
  std::vector<double> sector_weight(n + 1, 0.0);
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    sector_weight[std::popcount(i)] += std::norm(state.amplitudes[i]);
  }
  StateEnsemble out;
  for (int w = 0; w <= n; ++w) {  // w ascending = s descending
    if (sector_weight[w] < 1e-15) continue;
    QuantumState member = state;
    const double inv = 1.0 / std::sqrt(sector_weight[w]);
    for (std::size_t i = 0; i < member.amplitudes.size(); ++i) {
      if (std::popcount(i) == w) {
        member.amplitudes[i] *= inv;
      } else {
        member.amplitudes[i] = cplx{0.0, 0.0};
      }
    }
    out.members.push_back({sector_weight[w], std::move(member)});
  }
  check_valid(out);
  return out;
}

StateEnsemble random_global_phase_ensemble(int n_qubits, int n_samples,
                                           std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  StateEnsemble out;
  const double weight = 1.0 / n_samples;
  for (int m = 0; m < n_samples; ++m) {
    std::mt19937_64 rng = shot_rng(seed, static_cast<std::uint64_t>(m));
    const double theta = 2.0 * std::numbers::pi * uniform01(rng);
    out.members.push_back({weight, prepare_coherent(n_qubits, theta)});
  }
  return out;
}

StateEnsemble prepare_noisy(int n_qubits) {
  if (n_qubits > 14) {
    throw std::invalid_argument(
        "exhaustive noisy ensemble is limited to 14 qubits; use the sampled "
        "overload");
  }
  StateEnsemble out;
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  const double weight = 1.0 / static_cast<double>(dim);
  for (std::uint64_t bits = 0; bits < dim; ++bits) {
    out.members.push_back({weight, basis_state(n_qubits, bits)});
  }
  return out;
}

StateEnsemble prepare_noisy(int n_qubits, int n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be >= 1");
  StateEnsemble out;
  const double weight = 1.0 / n_samples;
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  for (int m = 0; m < n_samples; ++m) {
    std::mt19937_64 rng = shot_rng(seed, static_cast<std::uint64_t>(m));
    const std::uint64_t bits =
        std::min<std::uint64_t>(dim - 1, static_cast<std::uint64_t>(
                                             uniform01(rng) * dim));
    out.members.push_back({weight, basis_state(n_qubits, bits)});
  }
  return out;
}

}  // namespace cohsim
