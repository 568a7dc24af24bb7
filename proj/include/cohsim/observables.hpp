// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cohsim/ensemble.hpp"
#include "cohsim/state.hpp"

namespace cohsim {

// Collective spin components S_a = sum_q sigma_a(q) / 2 with |0> = spin up.
// All entries are ensemble averages; c2 = (sx2 + sy2) / n^2 is the
// squared-length of the planar spin per qubit pair, the long-range coherence
// figure of merit.
struct SpinObservables {
  double sx_mean = 0.0;
  double sy_mean = 0.0;
  double sz_mean = 0.0;
  double sx2 = 0.0;
  double sy2 = 0.0;
  double sz2 = 0.0;
  double c2 = 0.0;
};

// Applies a collective spin operator: out = S_a |psi>.
enum class SpinAxis { X, Y, Z };
QuantumState apply_collective_spin(const QuantumState& state, SpinAxis axis);

SpinObservables spin_observables(const StateEnsemble& ensemble);
SpinObservables spin_observables(const QuantumState& state);

// Independent route to c2 through the ladder operators:
// <S+ S- + S- S+> / (2 n^2).  Agrees with SpinObservables::c2 identically;
// kept as a cross-check.
double c2_from_ladder(const StateEnsemble& ensemble);

// Full counting statistics of the rotated collective spin
// S_theta = cos(theta) S_x + sin(theta) S_y.
// values[v] runs over the spin grid -n/2 .. n/2 (ascending, integer spacing);
// probs[t][v] is P(S_theta = values[v]) at thetas[t].
struct FcsDistribution {
  int n_qubits = 0;
  std::vector<double> thetas;
  std::vector<double> values;
  std::vector<std::vector<double>> probs;
};

// Uniform M-point grid over [0, 2*pi).
std::vector<double> uniform_theta_grid(int points);

// Exact distributions via the per-qubit basis change RZ(-(theta + pi/2))
// then RX(-pi/2) (so a Z readout reports S_theta).
FcsDistribution fcs_s_theta(const StateEnsemble& ensemble,
                            const std::vector<double>& thetas);

// Shot-sampled estimate: per theta, n_shots draws; shot streams are
// deterministic in (seed, theta index, shot index).
FcsDistribution fcs_s_theta_sampled(const StateEnsemble& ensemble,
                                    const std::vector<double>& thetas,
                                    std::uint64_t n_shots, std::uint64_t seed);

// Reconstructs c2 from the angular average of <S_theta^2>:
// (1/pi) * integral <S_theta^2> dtheta / n^2, evaluated by the Riemann sum
// over the (required uniform) grid.  Exact for any M >= 5 in exact mode
// because <S_theta^2> is a trigonometric polynomial of degree 2.
double c2_from_fcs(const FcsDistribution& fcs);

// Mean of S_theta at grid point t.
double fcs_mean(const FcsDistribution& fcs, int t);
// Second moment of S_theta at grid point t.
double fcs_second_moment(const FcsDistribution& fcs, int t);

// Parity diagnostics: mass on even and odd integer outcomes per theta (only
// meaningful for even qubit counts where the value grid is integer).
struct SelectionRuleReport {
  std::vector<double> even_mass;  // per theta
  std::vector<double> odd_mass;
  double even_total = 0.0;  // theta averages
  double odd_total = 0.0;
};
SelectionRuleReport selection_rule_report(const FcsDistribution& fcs);

// CSV with one row per (theta, value): "theta,value,prob".
std::string fcs_to_csv(const FcsDistribution& fcs);
// JSON in polar-plot form: {"thetas": [...], "values": [...],
// "probs": [[...], ...]}.
std::string fcs_to_json(const FcsDistribution& fcs);
FcsDistribution fcs_from_json(const std::string& text);

// Phase-space quasi-distribution over the planar spin components:
// W(sx, sy) = |<psi| g(S_x - sx) g(S_y - sy) |psi>| with the Gaussian
// regularization g(x) = exp(-x^2 / sigma^2); ensembles take the weighted sum
// inside the modulus.  values[ix][iy] corresponds to (sx_grid[ix],
// sy_grid[iy]).
struct WignerGrid {
  double sigma = 0.2;
  std::vector<double> sx_grid;
  std::vector<double> sy_grid;
  std::vector<std::vector<double>> values;
};

std::vector<double> uniform_grid(double lo, double hi, double step);

WignerGrid wigner(const StateEnsemble& ensemble, double sigma,
                  const std::vector<double>& sx_grid,
                  const std::vector<double>& sy_grid);

// Single phase-space point (same definition, no grid).
double wigner_point(const StateEnsemble& ensemble, double sigma, double sx,
                    double sy);

// CSV matrix: header row "sx\sy, <sy values>", then one row per sx.
std::string wigner_to_csv(const WignerGrid& grid);

}  // namespace cohsim
