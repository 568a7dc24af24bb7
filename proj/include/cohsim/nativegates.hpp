// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "cohsim/circuit.hpp"
#include "cohsim/counting.hpp"

namespace cohsim {

// Deferred single-qubit Z rotations (by wire) plus a global phase, applied
// after a circuit to complete an equivalence the emitted gates alone leave
// open.
struct LocalCorrection {
  std::map<int, double> rz;
  double global_phase = 0.0;
};

void apply_correction(QuantumState& state, const LocalCorrection& correction);

bool is_native(GateKind kind);
bool is_native(const Circuit& circuit);

// A drop-in native replacement for one abstract gate: time-ordered native
// gates plus the global phase the rewrite introduces.
struct NativeSequence {
  std::vector<Gate> gates;
  double global_phase = 0.0;
};

// H = exp(i pi/2) RZ(pi/2) RX(pi/2) RZ(pi/2).
NativeSequence lower_h(int q);
// CZ = CPHASE(pi).
NativeSequence lower_cz(int qa, int qb);
// CRX(p) = exp(-i p/4) (I (x) H) CPHASE(p) RZ(-p/2)_control (I (x) H).
NativeSequence lower_crx(int control, int target, double p);
// ISWAP = XY(pi).
NativeSequence lower_iswap(int qa, int qb);
// SWAP via the fused coupling below with phi = 0.
NativeSequence lower_swap(int qa, int qb);

// Core rewrite of the compiler: a phase coupling followed by a swap collapses
// into one native pair,
//   CPHASE(phi) SWAP = exp(-i pi/2) XY(pi) CPHASE(pi + phi)
//                      (RZ(-pi/2) (x) RZ(-pi/2)),
// so a routed coupling costs two 2-qubit gates instead of four.  The RZ pair
// acts before the native pair; commuting it through CPHASE (diagonal) and
// XY(pi) (a wire exchange on the support) pushes it to the end of a circuit,
// which is how compile_counting defers them into a LocalCorrection.
struct FusedCoupleSwap {
  Gate cphase;              // CPHASE(pi + phi) on (wa, wb)
  Gate xy;                  // XY(pi) on (wa, wb)
  LocalCorrection pre;      // RZ(-pi/2) on both wires (before), phase -pi/2
};

FusedCoupleSwap fuse_cphase_swap(int wa, int wb, double phi);

// Time-ordered gate list of the fused rewrite (pre-RZs included).
NativeSequence fused_sequence(const FusedCoupleSwap& fused);

// Rewrites every abstract gate to native form, emitting correction RZs
// inline (RZ is native, so nothing needs deferring except the global phase).
NativeSequence lower_to_native(const Circuit& circuit);

// Native counting circuit on the linear chain.  Every couple-then-swap step
// of the schedule is fused; the partner-side RZ(-pi/2) of each fusion is
// deferred to the end (they commute through the remaining schedule) and
// recorded in `correction` per final wire, together with the accumulated
// global phase.  Gate budget: coupling the full register costs exactly
// 2 (n_system * n_ancillas) - 2 two-qubit gates.
struct CompiledCounting {
  Circuit circuit;
  std::vector<int> system_wires;   // final wire of logical qubit j
  std::vector<int> ancilla_wires;  // final wire of ancilla a
  LocalCorrection correction;
  int two_qubit_gate_count = 0;
};

struct CompileOptions {
  // Append the rotated-spin readout stage (symbolic RZ(theta), RX(-pi/2))
  // and the measurement list for system + ancilla qubits.
  bool probe_stage = true;
  // Phase profile of the prepared equator state (empty = all zeros).
  std::vector<double> thetas;
};

CompiledCounting compile_counting(const CountingPlan& plan,
                                  const CompileOptions& options = {});

// Program text: PRAGMA / DECLARE header, one instruction per line, MEASURE
// trailer mapping logical qubit j to ro[j] and ancilla a to ro[n + a].
std::string export_program(const CompiledCounting& compiled);

// Unitary comparison by basis-column probing (symbol-free circuits on the
// same wire count; practical up to ~12 qubits).
enum class EquivClass { Exact, UpToGlobalPhase, UpToLocalRz };

struct EquivResult {
  bool equivalent = false;
  double distance = 0.0;        // max |difference| after the fitted correction
  double global_phase = 0.0;    // fitted phase (classes beyond Exact)
  std::map<int, double> rz;     // fitted per-wire RZ (UpToLocalRz only)
};

EquivResult unitary_equiv(const Circuit& a, const Circuit& b,
                          EquivClass up_to, double tolerance = 1e-9);

}  // namespace cohsim
