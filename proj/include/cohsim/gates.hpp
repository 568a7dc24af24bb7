// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cohsim/state.hpp"

namespace cohsim {

// Gate set.  The native hardware subset is {RX, RZ, CPHASE, XY}; the rest are
// abstract conveniences that the lowering pass eliminates.
enum class GateKind { RX, RZ, H, CPHASE, CZ, SWAP, ISWAP, XY, CRX, MEASURE };

// Conventions (matrices in gate_matrix, basis |q0 q1> with the first listed
// qubit as the high bit):
//   RX(a)     = exp(-i a X / 2)
//   RZ(a)     = diag(exp(-i a / 2), exp(+i a / 2))
//   CPHASE(p) = diag(1, 1, 1, exp(i p))
//   XY(b)     = identity on |00>,|11>; [[cos(b/2), i sin(b/2)],
//                                       [i sin(b/2), cos(b/2)]] on |01>,|10>
//   XY(pi)    = ISWAP  (|01> -> i|10>)
//   CRX(p)    = controlled RX(p), control = first qubit
struct Gate {
  GateKind kind = GateKind::RX;
  std::vector<int> qubits;  // one or two wire indices
  double angle = 0.0;
  // When set, the angle is a named placeholder; the gate cannot be simulated
  // until bind_symbol substitutes a value.
  std::optional<std::string> symbol;
};

const char* gate_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

// Number of wires the kind acts on (1 or 2); MEASURE reports 1.
int gate_arity(GateKind kind);

// True for kinds that carry an angle parameter.
bool gate_has_angle(GateKind kind);

// Gate factories.
Gate rx(int q, double a);
Gate rz(int q, double a);
Gate rz_symbolic(int q, const std::string& symbol);
Gate h(int q);
Gate cphase(int qa, int qb, double p);
Gate cz(int qa, int qb);
Gate swap(int qa, int qb);
Gate iswap(int qa, int qb);
Gate xy(int qa, int qb, double b);
Gate crx(int control, int target, double p);

// Unitary of a (bound, non-MEASURE) gate: 2x2 or 4x4, row-major.
std::vector<cplx> gate_matrix(const Gate& gate);

// Applies the gate in place.  Throws std::invalid_argument for MEASURE,
// out-of-range or duplicate wires, and std::runtime_error for unbound
// symbolic angles.
void apply_gate(QuantumState& state, const Gate& gate);

// Low-level appliers used across the library (matrix row-major, basis of the
// two-qubit version: first index is the high bit).
void apply_1q(QuantumState& state, const std::array<cplx, 4>& m, int q);
void apply_2q(QuantumState& state, const std::array<cplx, 16>& m, int q_hi,
              int q_lo);

}  // namespace cohsim
