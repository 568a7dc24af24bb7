// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "cohsim/nativegates.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cohsim/parallel.hpp"

namespace cohsim {

namespace {
constexpr double kPi = std::numbers::pi;
}

void apply_correction(QuantumState& state, const LocalCorrection& correction) {
  for (const auto& [wire, angle] : correction.rz) {
    apply_gate(state, rz(wire, angle));
  }
  apply_global_phase(state, correction.global_phase);
}

bool is_native(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RZ:
    case GateKind::CPHASE:
    case GateKind::XY:
      return true;
    default:
      return false;
  }
}

bool is_native(const Circuit& circuit) {
  for (const Gate& g : circuit.gates) {
    if (!is_native(g.kind)) return false;
  }
  return true;
}

NativeSequence lower_h(int q) {
  NativeSequence seq;
  seq.gates = {rz(q, kPi / 2.0), rx(q, kPi / 2.0), rz(q, kPi / 2.0)};
  seq.global_phase = kPi / 2.0;
  return seq;
}

NativeSequence lower_cz(int qa, int qb) {
  NativeSequence seq;
  seq.gates = {cphase(qa, qb, kPi)};
  return seq;
}

NativeSequence lower_crx(int control, int target, double p) {
  NativeSequence seq;
  const NativeSequence h = lower_h(target);
  seq.gates.insert(seq.gates.end(), h.gates.begin(), h.gates.end());
  seq.gates.push_back(rz(control, -p / 2.0));
  seq.gates.push_back(cphase(control, target, p));
  seq.gates.insert(seq.gates.end(), h.gates.begin(), h.gates.end());
  seq.global_phase = -p / 4.0 + 2.0 * h.global_phase;
  return seq;
}

NativeSequence lower_iswap(int qa, int qb) {
  NativeSequence seq;
  seq.gates = {xy(qa, qb, kPi)};
  return seq;
}

FusedCoupleSwap fuse_cphase_swap(int wa, int wb, double phi) {
  FusedCoupleSwap fused;
  fused.cphase = cphase(wa, wb, kPi + phi);
  fused.xy = xy(wa, wb, kPi);
  fused.pre.rz[wa] = -kPi / 2.0;
  fused.pre.rz[wb] = -kPi / 2.0;
  fused.pre.global_phase = -kPi / 2.0;
  return fused;
}

NativeSequence fused_sequence(const FusedCoupleSwap& fused) {
  NativeSequence seq;
  for (const auto& [wire, angle] : fused.pre.rz) {
    seq.gates.push_back(rz(wire, angle));
  }
  seq.gates.push_back(fused.cphase);
  seq.gates.push_back(fused.xy);
  seq.global_phase = fused.pre.global_phase;
  return seq;
}

NativeSequence lower_swap(int qa, int qb) {
  return fused_sequence(fuse_cphase_swap(qa, qb, 0.0));
}

NativeSequence lower_to_native(const Circuit& circuit) {
  validate_circuit(circuit);
  NativeSequence out;
  for (const Gate& g : circuit.gates) {
    if (is_native(g.kind)) {
      out.gates.push_back(g);
      continue;
    }
    NativeSequence seq;
    switch (g.kind) {
      case GateKind::H:
        seq = lower_h(g.qubits[0]);
        break;
      case GateKind::CZ:
        seq = lower_cz(g.qubits[0], g.qubits[1]);
        break;
      case GateKind::SWAP:
        seq = lower_swap(g.qubits[0], g.qubits[1]);
        break;
      case GateKind::ISWAP:
        seq = lower_iswap(g.qubits[0], g.qubits[1]);
        break;
      case GateKind::CRX:
        seq = lower_crx(g.qubits[0], g.qubits[1], g.angle);
        break;
      default:
        throw std::invalid_argument("cannot lower gate kind");
    }
    out.gates.insert(out.gates.end(), seq.gates.begin(), seq.gates.end());
    out.global_phase += seq.global_phase;
  }
  return out;
}

CompiledCounting compile_counting(const CountingPlan& plan,
                                  const CompileOptions& options) {
  CountingPlan chain = plan;
  chain.layout = CouplingLayout::LinearChain;
  const CountingSchedule sched = counting_schedule(chain, chain.n_system);
  const int n = chain.n_system;
  const int na = chain.n_ancillas;

  CompiledCounting out;
  out.circuit.n_qubits = sched.n_wires;
  out.system_wires = sched.final_system_wire;
  out.ancilla_wires = sched.final_ancilla_wire;

  for (int j = 0; j < n; ++j) {
    out.circuit.gates.push_back(rx(sched.initial_system_wire[j], kPi / 2.0));
  }
  for (int a = 0; a < na; ++a) {
    out.circuit.gates.push_back(rx(sched.initial_ancilla_wire[a], kPi / 2.0));
  }
  if (!options.thetas.empty()) {
    if (static_cast<int>(options.thetas.size()) != n) {
      throw std::invalid_argument("need one theta per system qubit");
    }
    for (int j = 0; j < n; ++j) {
      out.circuit.gates.push_back(
          rz(sched.initial_system_wire[j], options.thetas[j]));
    }
  }

  std::vector<int> fuse_count(n, 0);
  for (const CouplingStep& step : sched.steps) {
    const double phi = chain.phis[step.ancilla];
    if (!step.swap_after) {
      out.circuit.gates.push_back(rz(step.ancilla_wire, -phi / 2.0));
      out.circuit.gates.push_back(
          cphase(step.partner_wire, step.ancilla_wire, phi));
      out.two_qubit_gate_count += 1;
      continue;
    }
    // Fused couple+swap.  The ancilla-side RZ(-pi/2) of the fusion merges
    // into the coupling offset; the partner-side one is deferred (it commutes
    // with every later CPHASE and travels with the qubit through XY(pi)).
    out.circuit.gates.push_back(
        rz(step.ancilla_wire, -phi / 2.0 - kPi / 2.0));
    out.circuit.gates.push_back(
        cphase(step.partner_wire, step.ancilla_wire, kPi + phi));
    out.circuit.gates.push_back(xy(step.partner_wire, step.ancilla_wire, kPi));
    out.two_qubit_gate_count += 2;
    fuse_count[step.system_qubit] += 1;
    out.correction.global_phase += -kPi / 2.0;
  }
  for (int j = 0; j < n; ++j) {
    if (fuse_count[j] > 0) {
      out.correction.rz[out.system_wires[j]] = fuse_count[j] * (-kPi / 2.0);
    }
  }

  if (options.probe_stage) {
    for (int j = 0; j < n; ++j) {
      out.circuit.gates.push_back(rz_symbolic(out.system_wires[j], "theta"));
    }
    for (int j = 0; j < n; ++j) {
      out.circuit.gates.push_back(rx(out.system_wires[j], -kPi / 2.0));
    }
    for (int a = 0; a < na; ++a) {
      out.circuit.gates.push_back(rx(out.ancilla_wires[a], -kPi / 2.0));
    }
    for (int j = 0; j < n; ++j) {
      out.circuit.measurements.push_back({out.system_wires[j], j});
    }
    for (int a = 0; a < na; ++a) {
      out.circuit.measurements.push_back({out.ancilla_wires[a], n + a});
    }
  } else {
    for (int a = 0; a < na; ++a) {
      out.circuit.gates.push_back(rx(out.ancilla_wires[a], -kPi / 2.0));
    }
    for (int a = 0; a < na; ++a) {
      out.circuit.measurements.push_back({out.ancilla_wires[a], a});
    }
  }
  validate_circuit(out.circuit);
  return out;
}

std::string export_program(const CompiledCounting& compiled) {
  std::ostringstream out;
  out << "PRAGMA INITIAL_REWIRING \"NAIVE\"\n";
  out << "DECLARE ro BIT[" << compiled.circuit.measurements.size() << "]\n";
  for (const Gate& g : compiled.circuit.gates) {
    out << gate_text(g) << '\n';
  }
  for (const Measurement& m : compiled.circuit.measurements) {
    out << "MEASURE " << m.qubit << " ro[" << m.slot << "]\n";
  }
  return out.str();
}

namespace {
void check_comparable(const Circuit& a, const Circuit& b) {
  if (a.n_qubits != b.n_qubits) {
    throw std::invalid_argument("circuits act on different wire counts");
  }
  if (has_symbolic_angles(a) || has_symbolic_angles(b)) {
    throw std::invalid_argument("bind symbolic angles before comparing");
  }
  if (a.n_qubits > 12) {
    throw std::invalid_argument(
        "column-probing comparison is limited to 12 qubits");
  }
}
}  // namespace

EquivResult unitary_equiv(const Circuit& a, const Circuit& b,
                          EquivClass up_to, double tolerance) {
  check_comparable(a, b);
  const int n = a.n_qubits;
  const std::size_t dim = std::size_t{1} << n;
  EquivResult result;

  if (up_to == EquivClass::Exact) {
    std::vector<double> col_max(dim, 0.0);
    parallel_for(dim, [&](std::size_t i) {
      const QuantumState ca = run_circuit(a, basis_state(n, i));
      const QuantumState cb = run_circuit(b, basis_state(n, i));
      double m = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
        m = std::max(m, std::abs(ca.amplitudes[j] - cb.amplitudes[j]));
      }
      col_max[i] = m;
    });
    for (double m : col_max) result.distance = std::max(result.distance, m);
    result.equivalent = result.distance <= tolerance;
    return result;
  }

  // Fit pass: per-row phase accumulators v_j = sum_i A_ij conj(B_ij).
  // If A = exp(i gamma) D B with D diagonal, v_j = exp(i gamma) D_jj since
  // the rows of B have unit norm.
  std::vector<cplx> v(dim, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < dim; ++i) {
    const QuantumState ca = run_circuit(a, basis_state(n, i));
    const QuantumState cb = run_circuit(b, basis_state(n, i));
    for (std::size_t j = 0; j < dim; ++j) {
      v[j] += ca.amplitudes[j] * std::conj(cb.amplitudes[j]);
    }
  }

  std::vector<cplx> row_factor(dim, cplx{1.0, 0.0});
  if (up_to == EquivClass::UpToGlobalPhase) {
    cplx trace{0.0, 0.0};
    for (const cplx& x : v) trace += x;
    result.global_phase = std::abs(trace) > 0.0 ? std::arg(trace) : 0.0;
    const cplx f = std::polar(1.0, result.global_phase);
    for (std::size_t j = 0; j < dim; ++j) row_factor[j] = f;
  } else {
    const double psi0 = std::arg(v[0] == cplx{0.0, 0.0} ? cplx{1.0, 0.0}
                                                        : v[0]);
    std::vector<double> alpha(n, 0.0);
    double alpha_sum = 0.0;
    for (int q = 0; q < n; ++q) {
      const cplx vq = v[std::size_t{1} << q];
      alpha[q] = (vq == cplx{0.0, 0.0} ? 0.0 : std::arg(vq)) - psi0;
      alpha_sum += alpha[q];
      result.rz[q] = alpha[q];
    }
    result.global_phase = psi0 + alpha_sum / 2.0;
    for (std::size_t j = 0; j < dim; ++j) {
      double phase = result.global_phase;
      for (int q = 0; q < n; ++q) {
        phase += alpha[q] * (((j >> q) & 1u) ? 0.5 : -0.5);
      }
      row_factor[j] = std::polar(1.0, phase);
    }
  }

  std::vector<double> col_max(dim, 0.0);
  parallel_for(dim, [&](std::size_t i) {
    const QuantumState ca = run_circuit(a, basis_state(n, i));
    const QuantumState cb = run_circuit(b, basis_state(n, i));
    double m = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      m = std::max(m,
                   std::abs(ca.amplitudes[j] - row_factor[j] * cb.amplitudes[j]));
    }
    col_max[i] = m;
  });
  for (double m : col_max) result.distance = std::max(result.distance, m);
  result.equivalent = result.distance <= tolerance;
  return result;
}

}  // namespace cohsim
