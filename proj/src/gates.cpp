// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "cohsim/gates.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace cohsim {

namespace {
const cplx kI{0.0, 1.0};

Gate make(GateKind kind, std::vector<int> qubits, double angle) {
  Gate g;
  g.kind = kind;
  g.qubits = std::move(qubits);
  g.angle = angle;
  return g;
}
}  // namespace

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RZ: return "RZ";
    case GateKind::H: return "H";
    case GateKind::CPHASE: return "CPHASE";
    case GateKind::CZ: return "CZ";
    case GateKind::SWAP: return "SWAP";
    case GateKind::ISWAP: return "ISWAP";
    case GateKind::XY: return "XY";
    case GateKind::CRX: return "CRX";
    case GateKind::MEASURE: return "MEASURE";
  }
  throw std::invalid_argument("unknown gate kind");
}

GateKind gate_kind_from_name(const std::string& name) {
  static const std::unordered_map<std::string, GateKind> table = {
      {"RX", GateKind::RX},       {"RZ", GateKind::RZ},
      {"H", GateKind::H},         {"CPHASE", GateKind::CPHASE},
      {"CZ", GateKind::CZ},       {"SWAP", GateKind::SWAP},
      {"ISWAP", GateKind::ISWAP}, {"XY", GateKind::XY},
      {"CRX", GateKind::CRX},     {"MEASURE", GateKind::MEASURE}};
  auto it = table.find(name);
  if (it == table.end()) {
    throw std::invalid_argument("unknown gate name: " + name);
  }
  return it->second;
}

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RZ:
    case GateKind::H:
    case GateKind::MEASURE:
      return 1;
    default:
      return 2;
  }
}

bool gate_has_angle(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RZ:
    case GateKind::CPHASE:
    case GateKind::XY:
    case GateKind::CRX:
      return true;
    default:
      return false;
  }
}

Gate rx(int q, double a) { return make(GateKind::RX, {q}, a); }
Gate rz(int q, double a) { return make(GateKind::RZ, {q}, a); }
Gate rz_symbolic(int q, const std::string& symbol) {
  Gate g = make(GateKind::RZ, {q}, 0.0);
  g.symbol = symbol;
  return g;
}
Gate h(int q) { return make(GateKind::H, {q}, 0.0); }
Gate cphase(int qa, int qb, double p) {
  return make(GateKind::CPHASE, {qa, qb}, p);
}
Gate cz(int qa, int qb) { return make(GateKind::CZ, {qa, qb}, 0.0); }
Gate swap(int qa, int qb) { return make(GateKind::SWAP, {qa, qb}, 0.0); }
Gate iswap(int qa, int qb) { return make(GateKind::ISWAP, {qa, qb}, 0.0); }
Gate xy(int qa, int qb, double b) { return make(GateKind::XY, {qa, qb}, b); }
Gate crx(int control, int target, double p) {
  return make(GateKind::CRX, {control, target}, p);
}

std::vector<cplx> gate_matrix(const Gate& gate) {
  if (gate.symbol) {
    throw std::runtime_error("unbound symbolic angle '" + *gate.symbol + "'");
  }
  const double a = gate.angle;
  const double c = std::cos(a / 2.0), s = std::sin(a / 2.0);
  switch (gate.kind) {
    case GateKind::RX:
      return {c, -kI * s, -kI * s, c};
    case GateKind::RZ:
      return {std::polar(1.0, -a / 2.0), 0.0, 0.0, std::polar(1.0, a / 2.0)};
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      return {r, r, r, -r};
    }
    case GateKind::CPHASE:
      return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0,
              std::polar(1.0, a)};
    case GateKind::CZ:
      return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1};
    case GateKind::SWAP:
      return {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1};
    case GateKind::ISWAP:
      return {1, 0, 0, 0, 0, 0, kI, 0, 0, kI, 0, 0, 0, 0, 0, 1};
    case GateKind::XY:
      return {1, 0, 0, 0, 0, c, kI * s, 0, 0, kI * s, c, 0, 0, 0, 0, 1};
    case GateKind::CRX:
      return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, c, -kI * s, 0, 0, -kI * s, c};
    case GateKind::MEASURE:
      throw std::invalid_argument("MEASURE has no unitary");
  }
  throw std::invalid_argument("unknown gate kind");
}

void apply_1q(QuantumState& state, const std::array<cplx, 4>& m, int q) {
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t dim = state.amplitudes.size();
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & bit) continue;
    const cplx a0 = state.amplitudes[base];
    const cplx a1 = state.amplitudes[base | bit];
    state.amplitudes[base] = m[0] * a0 + m[1] * a1;
    state.amplitudes[base | bit] = m[2] * a0 + m[3] * a1;
  }
}

void apply_2q(QuantumState& state, const std::array<cplx, 16>& m, int q_hi,
              int q_lo) {
  const std::size_t hi = std::size_t{1} << q_hi;
  const std::size_t lo = std::size_t{1} << q_lo;
  const std::size_t dim = state.amplitudes.size();
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & (hi | lo)) continue;
    const std::size_t i00 = base, i01 = base | lo, i10 = base | hi,
                      i11 = base | hi | lo;
    const cplx a00 = state.amplitudes[i00], a01 = state.amplitudes[i01],
               a10 = state.amplitudes[i10], a11 = state.amplitudes[i11];
    state.amplitudes[i00] = m[0] * a00 + m[1] * a01 + m[2] * a10 + m[3] * a11;
    state.amplitudes[i01] = m[4] * a00 + m[5] * a01 + m[6] * a10 + m[7] * a11;
    state.amplitudes[i10] =
        m[8] * a00 + m[9] * a01 + m[10] * a10 + m[11] * a11;
    state.amplitudes[i11] =
        m[12] * a00 + m[13] * a01 + m[14] * a10 + m[15] * a11;
  }
}

void apply_gate(QuantumState& state, const Gate& gate) {
  if (gate.kind == GateKind::MEASURE) {
    throw std::invalid_argument("MEASURE cannot be applied as a unitary");
  }
  const int arity = gate_arity(gate.kind);
  if (static_cast<int>(gate.qubits.size()) != arity) {
    throw std::invalid_argument("gate wire count mismatch");
  }
  for (int q : gate.qubits) {
    if (q < 0 || q >= state.n_qubits) {
      throw std::invalid_argument("gate wire out of range");
    }
  }
  const std::vector<cplx> m = gate_matrix(gate);
  if (arity == 1) {
    apply_1q(state, {m[0], m[1], m[2], m[3]}, gate.qubits[0]);
    return;
  }
  if (gate.qubits[0] == gate.qubits[1]) {
    throw std::invalid_argument("two-qubit gate needs distinct wires");
  }
  std::array<cplx, 16> m4;
  std::copy(m.begin(), m.end(), m4.begin());
  apply_2q(state, m4, gate.qubits[0], gate.qubits[1]);
}

}  // namespace cohsim
