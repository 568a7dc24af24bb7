// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "cohsim/state.hpp"

#include <cmath>
#include <stdexcept>

namespace cohsim {

namespace {
constexpr int kMaxQubits = 28;  // 2^28 amplitudes = 4 GiB; desk-scale guard

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range: " +
                                std::to_string(n_qubits));
  }
}
}  // namespace

QuantumState zero_state(int n_qubits) { return basis_state(n_qubits, 0); }

QuantumState basis_state(int n_qubits, std::uint64_t bits) {
  check_qubit_count(n_qubits);
  if (bits >> n_qubits) {
    throw std::invalid_argument("basis index exceeds qubit count");
  }
  QuantumState state;
  state.n_qubits = n_qubits;
  state.amplitudes.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
  state.amplitudes[bits] = cplx{1.0, 0.0};
  return state;
}

double norm_sq(const QuantumState& state) {
  double total = 0.0;
  for (const cplx& a : state.amplitudes) total += std::norm(a);
  return total;
}

void normalize(QuantumState& state) {
  const double n2 = norm_sq(state);
  if (n2 < 1e-300) throw std::runtime_error("cannot normalize zero vector");
  const double inv = 1.0 / std::sqrt(n2);
  for (cplx& a : state.amplitudes) a *= inv;
}

cplx overlap(const QuantumState& a, const QuantumState& b) {
  if (a.n_qubits != b.n_qubits || a.amplitudes.size() != b.amplitudes.size()) {
    throw std::invalid_argument("overlap of states with mismatched size");
  }
  cplx total{0.0, 0.0};
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    total += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return total;
}

double fidelity(const QuantumState& a, const QuantumState& b) {
  return std::abs(overlap(a, b));
}

void apply_global_phase(QuantumState& state, double phase) {
  const cplx factor = std::polar(1.0, phase);
  for (cplx& a : state.amplitudes) a *= factor;
}

QuantumState permute_qubits(const QuantumState& state,
                            const std::vector<int>& wire_of_new) {
  const int n = state.n_qubits;
  if (static_cast<int>(wire_of_new.size()) != n) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::vector<bool> seen(n, false);
  for (int w : wire_of_new) {
    if (w < 0 || w >= n || seen[w]) {
      throw std::invalid_argument("not a permutation of wires");
    }
    seen[w] = true;
  }
  QuantumState out;
  out.n_qubits = n;
  out.amplitudes.assign(state.amplitudes.size(), cplx{0.0, 0.0});
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    std::size_t j = 0;
    for (int q = 0; q < n; ++q) {
      j |= ((i >> wire_of_new[q]) & 1u) << q;
    }
    out.amplitudes[j] = state.amplitudes[i];
  }
  return out;
}

QuantumState extract_qubits(const QuantumState& state,
                            const std::vector<int>& keep,
                            std::uint64_t dropped_bits) {
  const int n = state.n_qubits;
  const int m = static_cast<int>(keep.size());
  if (m < 1 || m > n) throw std::invalid_argument("bad keep list size");
  std::vector<bool> kept(n, false);
  for (int w : keep) {
    if (w < 0 || w >= n || kept[w]) {
      throw std::invalid_argument("bad wire in keep list");
    }
    kept[w] = true;
  }
  std::uint64_t dropped_mask = 0;
  for (int w = 0; w < n; ++w) {
    if (!kept[w]) dropped_mask |= std::uint64_t{1} << w;
  }
  const std::uint64_t want = dropped_bits & dropped_mask;

  QuantumState out;
  out.n_qubits = m;
  out.amplitudes.assign(std::size_t{1} << m, cplx{0.0, 0.0});
  double leftover = 0.0, total = 0.0;
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    const double w2 = std::norm(state.amplitudes[i]);
    total += w2;
    if ((i & dropped_mask) != want) {
      leftover += w2;
      continue;
    }
    std::size_t j = 0;
    for (int q = 0; q < m; ++q) j |= ((i >> keep[q]) & 1u) << q;
    out.amplitudes[j] = state.amplitudes[i];
  }
  if (total > 0.0 && leftover > 1e-12 * total) {
    throw std::runtime_error("dropped qubits are not in a definite state");
  }
  return out;
}

void check_valid(const QuantumState& state) {
  check_qubit_count(state.n_qubits);
  if (state.amplitudes.size() != (std::size_t{1} << state.n_qubits)) {
    throw std::invalid_argument("amplitude vector has wrong length");
  }
  for (const cplx& a : state.amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("non-finite amplitude");
    }
  }
}

}  // namespace cohsim
