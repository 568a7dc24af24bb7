// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cohsim/circuit.hpp"
#include "cohsim/ensemble.hpp"
#include "cohsim/sampling.hpp"

namespace cohsim {

// How the ancillas reach the system qubits.
enum class CouplingLayout {
  AllToAll,     // every ancilla touches every system qubit directly
  LinearChain,  // nearest-neighbor chain; the routing interleaves swaps
};

// Ancilla-based particle-number counting.  Ancilla a is prepared on the
// equator, picks up a phase phis[a] per spin-up system qubit through
// controlled-phase couplings (offset so the half-filled sector is the
// stationary one), and is read out in the X basis.  With phis halving from
// pi/2^0 the all-zero outcome projects toward the half-filled S_z sector.
struct CountingPlan {
  int n_system = 0;
  int n_ancillas = 0;
  std::vector<double> phis;
  CouplingLayout layout = CouplingLayout::AllToAll;
};

// floor(log2(n)) ancillas with phis pi/2^a.  More ancillas sharpen the
// filter: the keep-all channel equals exact sector dephasing only when
// 2^n_ancillas exceeds the qubit count (otherwise sectors n_ancillas powers
// of two apart stay coherent).
CountingPlan default_plan(int n_system,
                          CouplingLayout layout = CouplingLayout::AllToAll);

void validate_plan(const CountingPlan& plan);

// One ancilla-system coupling in schedule order.  Wires are the positions
// *before* the step; swap_after means the pair exchanges places right after
// the phase gate (the native pass fuses that swap into the coupling).
struct CouplingStep {
  int ancilla = 0;
  int system_qubit = 0;
  int ancilla_wire = 0;
  int partner_wire = 0;
  bool swap_after = false;
};

// Wire assignment + ordered steps for coupling the first k system qubits.
struct CountingSchedule {
  int n_wires = 0;
  int coupled_qubits = 0;                  // k
  std::vector<int> initial_system_wire;    // by logical qubit
  std::vector<int> initial_ancilla_wire;   // by ancilla index
  std::vector<int> final_system_wire;
  std::vector<int> final_ancilla_wire;
  std::vector<CouplingStep> steps;
};

// Builds the schedule.  The linear chain lays wires out as
// [a_last, ..., a_1, q0, a_0, q1, ..., q_{n-1}]; each ancilla sweeps
// rightward through the register with couple-then-swap steps, and only the
// very first and very last couplings of the whole schedule need no swap.
// Partial coupling (k < n_system) is only supported on the all-to-all
// layout.
CountingSchedule counting_schedule(const CountingPlan& plan, int k);

// Abstract counting circuit (CPHASE + explicit SWAP form).  System qubits
// start on the equator with phase profile thetas (empty = all zero); ancilla
// measurement slots are 0..n_ancillas-1.  The system output is left in the
// hardware frame: logical qubit j sits on final_system_wire[j] and needs a
// trailing RZ(+pi/2) to return to the prepared frame.
struct CountingCircuit {
  Circuit circuit;
  std::vector<int> system_wires;   // final wire of logical qubit j
  std::vector<int> ancilla_wires;  // final wire of ancilla a
  int coupled_qubits = 0;
};

CountingCircuit build_counting_circuit(const CountingPlan& plan,
                                       const std::vector<double>& thetas = {},
                                       int k = -1);

// Full experiment circuit: counting plus the rotated-spin readout stage on
// the system qubits.  Binding "theta" (or passing probe_theta directly with
// symbolic=false) to -t makes the system Z readout report
// S_t = cos(t) S_x + sin(t) S_y in the logical frame.  Slots: system qubits
// in logical order 0..n-1, then ancillas.
CountingCircuit counting_measurement_circuit(const CountingPlan& plan,
                                             const std::vector<double>& thetas,
                                             double probe_theta, bool symbolic,
                                             int k = -1);

enum class CountingMode { PostselectAllZero, KeepAllOutcomes };

struct CountingResult {
  StateEnsemble ensemble;            // logical-frame system states
  double success_probability = 1.0;  // accepted mass (keep-all reports 1)
  // For keep-all: ancilla outcome pattern of each member (bit a = ancilla a).
  std::vector<std::uint64_t> outcomes;
};

// Exact protocol run.  Post-selection keeps the all-zero ancilla pattern;
// keep-all returns every realizable outcome branch with its Born weight.
CountingResult run_counting(const CountingPlan& plan,
                            const std::vector<double>& thetas,
                            CountingMode mode, int k = -1);

// Shot-sampled variant: ancilla patterns are drawn n_shots times; branch
// weights become empirical frequencies (conditional states stay exact).
CountingResult run_counting_sampled(const CountingPlan& plan,
                                    const std::vector<double>& thetas,
                                    CountingMode mode, std::uint64_t n_shots,
                                    std::uint64_t seed, int k = -1);

// Staged-coupling diagnostics: couple only the first k qubits, k = 0..n.
struct SweepPoint {
  int k = 0;
  double c2 = 0.0;
  double sx = 0.0;
  double success_probability = 1.0;
  std::string mode;
};

struct SweepOptions {
  std::uint64_t n_shots = 0;  // 0 = exact expectation values
  std::uint64_t seed = 0;
  int theta_grid_points = 64;  // angular grid for the c2 reconstruction
};

std::vector<SweepPoint> staged_coupling_sweep(const CountingPlan& plan,
                                              CountingMode mode,
                                              const SweepOptions& options);

// CSV: "k,C2,Sx,success_probability,mode".
std::string sweep_to_csv(const std::vector<SweepPoint>& points);

}  // namespace cohsim
