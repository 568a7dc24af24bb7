// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Release acceptance gate.  Every clause prints one [PASS]/[FAIL] line with
// the measured value; [info] lines carry supplementary evidence and do not
// count.  The exit code is the number of failed criteria (0 = all green).
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cohsim/circuit.hpp"
#include "cohsim/counting.hpp"
#include "cohsim/gates.hpp"
#include "cohsim/mitigation.hpp"
#include "cohsim/nativegates.hpp"
#include "cohsim/observables.hpp"
#include "cohsim/sampling.hpp"
#include "cohsim/state.hpp"
#include "cohsim/states.hpp"

using namespace cohsim;
using std::numbers::pi;

namespace {

// ---------------------------------------------------------------------------
// Reporting scaffolding.

struct Report {
  std::map<int, int> failed_clauses;
  std::map<int, int> total_clauses;

  void clause(int criterion, const std::string& label, bool ok,
              const std::string& detail) {
    ++total_clauses[criterion];
    if (!ok) ++failed_clauses[criterion];
    std::printf("[%s] C%d %s: %s\n", ok ? "PASS" : "FAIL", criterion,
                label.c_str(), detail.c_str());
  }

  void info(int criterion, const std::string& label, const std::string& detail) {
    std::printf("[info] C%d %s: %s\n", criterion, label.c_str(), detail.c_str());
  }

  int summarize() {
    std::printf("\n=== summary ===\n");
    int failed_criteria = 0;
    for (const auto& [criterion, total] : total_clauses) {
      const int failed = failed_clauses.count(criterion)
                             ? failed_clauses.at(criterion)
                             : 0;
      if (failed > 0) {
        ++failed_criteria;
        std::printf("criterion %2d: FAIL (%d/%d clauses failed)\n", criterion,
                    failed, total);
      } else {
        std::printf("criterion %2d: PASS (%d clauses)\n", criterion, total);
      }
    }
    std::printf("acceptance: %zu/%zu criteria passed, %d failed\n",
                total_clauses.size() - failed_criteria, total_clauses.size(),
                failed_criteria);
    return failed_criteria;
  }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

double max_fcs_column_diff(const FcsDistribution& a, const FcsDistribution& b) {
  double worst = 0.0;
  for (std::size_t t = 0; t < a.probs.size(); ++t) {
    for (std::size_t i = 0; i < a.probs[t].size(); ++i) {
      worst = std::max(worst, std::abs(a.probs[t][i] - b.probs[t][i]));
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Criterion 1: closed-form coherence values across register sizes.

void criterion_1(Report& r) {
  double coh_dev = 0.0, proj_dev = 0.0, worst_time = 0.0;
  for (int n : {2, 4, 6, 8, 10, 12}) {
    const double t0 = now_seconds();
    const QuantumState coh = prepare_coherent(n, 0.0);
    const double c_coh = spin_observables(coh).c2;
    const double t1 = now_seconds();
    const double c_proj = spin_observables(project_sz(coh, 0.0)).c2;
    const double t2 = now_seconds();
    coh_dev = std::max(coh_dev, std::abs(c_coh - (n + 1.0) / (4.0 * n)));
    proj_dev = std::max(proj_dev, std::abs(c_proj - (n + 2.0) / (4.0 * n)));
    worst_time = std::max({worst_time, t1 - t0, t2 - t1});
  }
  r.clause(1, "coherent c2 = (n+1)/(4n) for n = 2..12", coh_dev < 1e-10,
           "max |dev| " + num(coh_dev));
  r.clause(1, "projected c2 = (n+2)/(4n) for n = 2..12", proj_dev < 1e-10,
           "max |dev| " + num(proj_dev));
  r.clause(1, "each evaluation under 1 s", worst_time < 1.0,
           "slowest " + num(worst_time) + " s");
}

// ---------------------------------------------------------------------------
// Criterion 2: two-qubit closed forms over a 32-point relative-phase grid.

void criterion_2(Report& r) {
  double coh_dev = 0.0, proj_dev = 0.0, deph_dev = 0.0;
  for (double d : uniform_theta_grid(32)) {
    const std::vector<double> thetas = {d, 0.0};
    const QuantumState coh = prepare_coherent(2, thetas);
    const SpinObservables coh_obs = spin_observables(coh);
    coh_dev = std::max(coh_dev, std::abs(coh_obs.sx2 + coh_obs.sy2 -
                                         (1.0 + std::cos(d) / 2.0)));

    const SpinObservables proj_obs = spin_observables(project_sz(coh, 0.0));
    proj_dev = std::max(proj_dev,
                        std::abs(proj_obs.sx2 - (1.0 + std::cos(d)) / 2.0));

    const SpinObservables deph_obs = spin_observables(dephase_sz(coh));
    deph_dev = std::max(deph_dev,
                        std::abs(deph_obs.sx2 - (0.5 + std::cos(d) / 4.0)));
  }
  r.clause(2, "coherent pair <Sx^2 + Sy^2> = 1 + cos(d)/2", coh_dev < 1e-10,
           "max |dev| " + num(coh_dev) + " over 32 angles");
  r.clause(2, "projected pair <Sx^2> = (1 + cos(d))/2", proj_dev < 1e-10,
           "max |dev| " + num(proj_dev) + " over 32 angles");
  r.clause(2, "dephased pair <Sx^2> = 1/2 + cos(d)/4", deph_dev < 1e-10,
           "max |dev| " + num(deph_dev) + " over 32 angles");

  const QuantumState aligned = prepare_coherent(2, 0.0);
  const double c2p = spin_observables(project_sz(aligned, 0.0)).c2;
  const double c2d = spin_observables(dephase_sz(aligned)).c2;
  r.clause(2, "aligned-pair constants c2(projected) = 1/2, c2(dephased) = 3/8",
           std::abs(c2p - 0.5) < 1e-10 && std::abs(c2d - 0.375) < 1e-10,
           "measured " + num(c2p) + " and " + num(c2d));
}

// ---------------------------------------------------------------------------
// Criterion 3: ten-qubit counting against direct projection / dephasing.

void criterion_3(Report& r) {
  const double t0 = now_seconds();
  const int n = 10;
  const CountingPlan plan = default_plan(n);  // 3 ancillas

  const CountingResult post = run_counting(plan, {}, CountingMode::PostselectAllZero);
  const QuantumState target = project_sz(prepare_coherent(n, 0.0), 0.0);
  const double fid = fidelity(post.ensemble.members[0].state, target);
  r.clause(3, "post-selected state equals the projected state",
           std::abs(fid - 1.0) < 1e-10, "fidelity " + num(fid));
  const double want_p = binom(10, 5) / 1024.0;
  r.clause(3, "acceptance probability is the half-filled sector weight",
           std::abs(post.success_probability - want_p) < 1e-10 &&
               post.success_probability >= 0.1,
           "measured " + num(post.success_probability) + " (expected " +
               num(want_p) + ", floor 0.1)");

  const auto grid = uniform_theta_grid(64);
  const auto deph_fcs = fcs_s_theta(dephase_sz(prepare_coherent(n, 0.0)), grid);
  const CountingResult keep = run_counting(plan, {}, CountingMode::KeepAllOutcomes);
  const double diff3 = max_fcs_column_diff(fcs_s_theta(keep.ensemble, grid), deph_fcs);
  // Three ancillas resolve sector distances only mod 8; the +-8 coherences
  // on ten qubits survive, so exact agreement with full sector dephasing is
  // not achievable at this ancilla count.  Honest red; the next ancilla
  // closes the gap (see the info line).
  r.clause(3, "keep-all channel matches sector dephasing (3 ancillas)",
           diff3 < 1e-10, "max column |diff| " + num(diff3));
  CountingPlan plan4 = plan;
  plan4.n_ancillas = 4;
  plan4.phis = {pi, pi / 2, pi / 4, pi / 8};
  const CountingResult keep4 = run_counting(plan4, {}, CountingMode::KeepAllOutcomes);
  const double diff4 = max_fcs_column_diff(fcs_s_theta(keep4.ensemble, grid), deph_fcs);
  r.info(3, "keep-all with a fourth ancilla (2^4 > 10 ends the aliasing)",
         "max column |diff| " + num(diff4));

  const double elapsed = now_seconds() - t0;
  r.clause(3, "criterion runtime under 10 s", elapsed < 10.0,
           num(elapsed) + " s");
}

// ---------------------------------------------------------------------------
// Criterion 4: parity selection rule in the counting statistics.

void criterion_4(Report& r) {
  const int n = 10;
  const auto grid = uniform_theta_grid(64);
  const auto proj_fcs = fcs_s_theta(
      ensemble_from_state(project_sz(prepare_coherent(n, 0.0), 0.0)), grid);
  const auto proj_rep = selection_rule_report(proj_fcs);
  double max_even = 0.0;
  for (double m : proj_rep.even_mass) max_even = std::max(max_even, m);
  r.clause(4, "projected state: even outcomes vanish at every probe angle",
           max_even < 1e-12, "max even-outcome mass " + num(max_even));

  const auto deph_fcs = fcs_s_theta(dephase_sz(prepare_coherent(n, 0.0)), grid);
  const auto deph_rep = selection_rule_report(deph_fcs);
  double min_even = 1.0;
  for (double m : deph_rep.even_mass) min_even = std::min(min_even, m);
  r.clause(4, "dephased state: even outcomes stay populated",
           min_even > 1e-6, "min even-outcome mass " + num(min_even));
}

// ---------------------------------------------------------------------------
// Criterion 5: four-qubit single-ancilla protocol against published values.

void criterion_5(Report& r) {
  CountingPlan plan{4, 1, {pi / 2}, CouplingLayout::AllToAll};

  SweepOptions exact_opt;  // n_shots = 0
  const auto exact = staged_coupling_sweep(plan, CountingMode::PostselectAllZero, exact_opt);
  const double c2_exact = exact[4].c2;
  const double sx_exact = exact[4].sx;
  r.clause(5, "exact c2 after full coupling = 0.35 +- 0.005",
           std::abs(c2_exact - 0.35) < 0.005, "measured " + num(c2_exact));
  // The quoted 1.17 is a shot estimate from hardware-style runs; the exact
  // value of the protocol is 1.2, which misses the +-0.01 band.  Honest red.
  r.clause(5, "exact <Sx> after full coupling = 1.17 +- 0.01",
           std::abs(sx_exact - 1.17) < 0.01, "measured " + num(sx_exact));

  // Reference five-point shot curves (1000 shots per point on a virtual
  // machine): planar coherence c2 and the squared mean <Sx>^2 / n^2.
  const std::vector<double> ref_c2 = {0.316, 0.288, 0.281, 0.307, 0.349};
  const std::vector<double> ref_sx2 = {0.25, 0.219, 0.177, 0.136, 0.086};

  SweepOptions shot_opt;
  shot_opt.n_shots = 1000;
  shot_opt.seed = 1000;
  shot_opt.theta_grid_points = 64;
  const auto shots = staged_coupling_sweep(plan, CountingMode::PostselectAllZero, shot_opt);

  double worst_sigma = 0.0;  // in units of the 3-sigma band
  for (int k = 0; k <= 4; ++k) {
    const double band_c2 = 3.0 * std::sqrt(ref_c2[k] * (1.0 - ref_c2[k]) / 1000.0);
    const double band_sx = 3.0 * std::sqrt(ref_sx2[k] * (1.0 - ref_sx2[k]) / 1000.0);
    const double m_sx2 = (shots[k].sx / 4.0) * (shots[k].sx / 4.0);
    worst_sigma = std::max(worst_sigma, std::abs(shots[k].c2 - ref_c2[k]) / band_c2);
    worst_sigma = std::max(worst_sigma, std::abs(m_sx2 - ref_sx2[k]) / band_sx);
  }
  r.clause(5, "1000-shot sweep within 3-sigma of the reference curves",
           worst_sigma < 1.0,
           "worst deviation " + num(worst_sigma) + " of the band");

  // Reference values against this implementation's exact curve.
  double worst_ref = 0.0;
  int worst_ref_k = 0;
  for (int k = 0; k <= 4; ++k) {
    const double sx2_exact_k = (exact[k].sx / 4.0) * (exact[k].sx / 4.0);
    const double d = std::max(std::abs(ref_c2[k] - exact[k].c2),
                              std::abs(ref_sx2[k] - sx2_exact_k));
    if (d > worst_ref) {
      worst_ref = d;
      worst_ref_k = k;
    }
  }
  // The <Sx>^2/n^2 reference at k = 3 sits 0.00534 from the exact curve --
  // inside its own shot noise (sigma ~ 0.01) but outside 0.005.  Honest red.
  r.clause(5, "reference curves within 0.005 of the exact curve",
           worst_ref < 0.005,
           "worst |diff| " + num(worst_ref) + " at k = " + num(worst_ref_k));

  double worst_shot_vs_exact = 0.0;
  for (int k = 0; k <= 4; ++k) {
    const double m_sx2 = (shots[k].sx / 4.0) * (shots[k].sx / 4.0);
    const double e_sx2 = (exact[k].sx / 4.0) * (exact[k].sx / 4.0);
    worst_shot_vs_exact =
        std::max({worst_shot_vs_exact, std::abs(shots[k].c2 - exact[k].c2),
                  std::abs(m_sx2 - e_sx2)});
  }
  r.info(5, "1000-shot sweep against the exact curve",
         "worst |diff| " + num(worst_shot_vs_exact) +
             " (post-selected shot noise, same order as the reference gaps)");
}

// ---------------------------------------------------------------------------
// Criterion 6: native-gate compilation.

void criterion_6(Report& r) {
  // Fused couple-then-swap identity on ten random phases.
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(-pi, pi);
  double worst_dist = 0.0, worst_phase = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double phi = dist(rng);
    Circuit abstract;
    abstract.n_qubits = 2;
    abstract.gates = {cphase(0, 1, phi), swap(0, 1)};
    const auto seq = fused_sequence(fuse_cphase_swap(0, 1, phi));
    Circuit fused;
    fused.n_qubits = 2;
    fused.gates = seq.gates;
    const auto res = unitary_equiv(abstract, fused, EquivClass::UpToGlobalPhase, 1e-12);
    worst_dist = std::max(worst_dist, res.equivalent ? res.distance : 1.0);
    worst_phase = std::max(worst_phase,
                           std::abs(std::remainder(res.global_phase - seq.global_phase,
                                                   2 * pi)));
  }
  r.clause(6, "fused coupling+swap rewrite exact for 10 random phases",
           worst_dist < 1e-12 && worst_phase < 1e-12,
           "max matrix |diff| " + num(worst_dist) + ", max phase gap " +
               num(worst_phase));

  // Golden four-qubit, one-ancilla program.
  CountingPlan plan{4, 1, {pi / 2}, CouplingLayout::LinearChain};
  const CompiledCounting compiled = compile_counting(plan);
  const std::string want = read_file(std::string(COHSIM_GOLDEN_DIR) + "/counting_n4_na1.quil");
  const bool bytes_equal = export_program(compiled) == want;
  r.clause(6, "n=4 na=1 native program: 6 two-qubit gates, golden text",
           compiled.two_qubit_gate_count == 6 && bytes_equal,
           "two-qubit gates " + num(compiled.two_qubit_gate_count) +
               (bytes_equal ? ", listing matches byte-for-byte"
                            : ", listing DIFFERS"));

  // End-to-end: native circuit + deferred corrections reproduces the
  // abstract post-selected state.
  CompileOptions probe_less;
  probe_less.probe_stage = false;
  const CompiledCounting native = compile_counting(plan, probe_less);
  QuantumState hw = run_circuit(native.circuit);
  apply_correction(hw, native.correction);
  auto [p_hw, hw_sel] = postselect(hw, native.ancilla_wires[0], 0);
  QuantumState hw_sys = extract_qubits(hw_sel, native.system_wires);
  for (int q = 0; q < 4; ++q) apply_gate(hw_sys, rz(q, pi / 2));  // frame fix

  const CountingResult abstract = run_counting(plan, {}, CountingMode::PostselectAllZero);
  const double fid = fidelity(hw_sys, abstract.ensemble.members[0].state);
  r.clause(6, "native vs abstract post-selected fidelity",
           std::abs(fid - 1.0) < 1e-9,
           "fidelity " + num(fid) + ", acceptance " + num(p_hw));

  // Budget across register sizes.
  bool budget_ok = true;
  std::string budget_detail = "2(n*na - 1) met for all n <= 12";
  for (int n = 2; n <= 12 && budget_ok; ++n) {
    const int na_max = static_cast<int>(std::floor(std::log2(n)));
    for (int na = 1; na <= na_max; ++na) {
      CountingPlan p{n, na, {}, CouplingLayout::LinearChain};
      for (int a = 0; a < na; ++a) p.phis.push_back(pi / std::pow(2.0, a));
      const auto c = compile_counting(p);
      if (c.two_qubit_gate_count != 2 * (n * na - 1)) {
        budget_ok = false;
        budget_detail = "violated at n=" + num(n) + " na=" + num(na) + ": " +
                        num(c.two_qubit_gate_count);
        break;
      }
    }
  }
  r.clause(6, "two-qubit gate budget", budget_ok, budget_detail);
}

// ---------------------------------------------------------------------------
// Criterion 7: angular-average reconstruction of c2.

void criterion_7(Report& r) {
  const int n = 10;
  const auto grid = uniform_theta_grid(64);
  struct Case {
    const char* name;
    StateEnsemble e;
  };
  std::vector<Case> cases;
  cases.push_back({"coherent", ensemble_from_state(prepare_coherent(n, 0.0))});
  cases.push_back(
      {"projected", ensemble_from_state(project_sz(prepare_coherent(n, 0.0), 0.0))});
  cases.push_back({"dephased", dephase_sz(prepare_coherent(n, 0.0))});
  cases.push_back({"noisy", prepare_noisy(n)});

  double worst = 0.0;
  std::string worst_name = "-";
  for (const auto& c : cases) {
    const double direct = spin_observables(c.e).c2;
    const double via_fcs = c2_from_fcs(fcs_s_theta(c.e, grid));
    const double d = std::abs(direct - via_fcs);
    if (d > worst) {
      worst = d;
      worst_name = c.name;
    }
  }
  r.clause(7, "c2 from angular average equals the direct second moments",
           worst < 1e-8, "max |diff| " + num(worst) + " (" + worst_name + ")");

  const auto coh_fcs = fcs_s_theta(cases[0].e, {0.0});
  const double top = coh_fcs.probs[0].back();
  r.clause(7, "coherent statistics at probe angle 0 are a point mass at +n/2",
           std::abs(top - 1.0) < 1e-12, "P(+5) = " + num(top));
}

// ---------------------------------------------------------------------------
// Criterion 8: phase-space structure at sigma = 0.2.

void criterion_8(Report& r) {
  const int n = 10;
  const double sigma = 0.2;
  const auto axis = uniform_grid(-6.0, 6.0, 0.25);

  const StateEnsemble coh = ensemble_from_state(prepare_coherent(n, 0.0));
  const WignerGrid coh_grid = wigner(coh, sigma, axis, axis);
  double best = -1.0, bx = 0.0, by = 0.0;
  for (std::size_t ix = 0; ix < axis.size(); ++ix) {
    for (std::size_t iy = 0; iy < axis.size(); ++iy) {
      if (coh_grid.values[ix][iy] > best) {
        best = coh_grid.values[ix][iy];
        bx = axis[ix];
        by = axis[iy];
      }
    }
  }
  r.clause(8, "coherent distribution peaks at the (+n/2, 0) pole",
           std::abs(bx - 5.0) < 0.126 && std::abs(by) < 0.126,
           "max " + num(best) + " at (" + num(bx) + ", " + num(by) + ")");

  const StateEnsemble proj =
      ensemble_from_state(project_sz(prepare_coherent(n, 0.0), 0.0));

  // Angular spread along rings.  The sigma -> 0 distribution is phase-free
  // (rotationally symmetric), but at sigma = 0.2 the Gaussian filters single
  // out the fixed S_x / S_y quadrature axes, so the regularized function
  // keeps an angular ripple tied to the eigenvalue lattice.  Honest red; the
  // symmetry that does survive regularization (quarter turns map the
  // quadrature pair onto itself) is reported below, along with the residual
  // ripple a generic rotation leaves behind.
  double grid_max = 0.0;
  for (const auto& row : wigner(proj, sigma, axis, axis).values) {
    for (double v : row) grid_max = std::max(grid_max, v);
  }
  double worst_ripple = 0.0;
  for (double radius : {1.0, 2.0, 3.0, 4.0}) {
    double lo = 1e300, hi = -1e300;
    for (int j = 0; j < 16; ++j) {
      const double a = 2.0 * pi * j / 16.0;
      const double v = wigner_point(proj, sigma, radius * std::cos(a),
                                    radius * std::sin(a));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    worst_ripple = std::max(worst_ripple, (hi - lo) / grid_max);
  }
  r.clause(8, "projected distribution rotationally invariant on rings",
           worst_ripple < 1e-6,
           "max ring ripple " + num(worst_ripple) + " of the grid max");

  double quarter_dev = 0.0, gauge_dev = 0.0;
  const double delta = 0.37;
  const StateEnsemble proj_rot =
      ensemble_from_state(project_sz(prepare_coherent(n, delta), 0.0));
  const std::vector<std::pair<double, double>> samples = {
      {1.3, 0.4}, {2.2, -1.1}, {3.7, 0.9}, {0.6, 2.5}};
  for (const auto& [x, y] : samples) {
    quarter_dev = std::max(quarter_dev,
                           std::abs(wigner_point(proj, sigma, x, y) -
                                    wigner_point(proj, sigma, -y, x)));
    const double rx = x * std::cos(delta) - y * std::sin(delta);
    const double ry = x * std::sin(delta) + y * std::cos(delta);
    gauge_dev = std::max(gauge_dev, std::abs(wigner_point(proj, sigma, x, y) -
                                             wigner_point(proj_rot, sigma, rx, ry)));
  }
  r.info(8, "quarter-turn symmetry is exact", "max |diff| " + num(quarter_dev));
  r.info(8, "generic rotation holds only up to the quadrature-axis ripple",
         "max |diff| " + num(gauge_dev) + " at shift " + num(delta));

  double worst_even = 0.0;
  for (int ex = -4; ex <= 4; ex += 2) {
    for (int ey = -4; ey <= 4; ey += 2) {
      worst_even = std::max(worst_even, wigner_point(proj, sigma, ex, ey));
    }
  }
  r.clause(8, "projected distribution suppressed on even-integer points",
           worst_even < 1e-3, "max value " + num(worst_even));
}

// ---------------------------------------------------------------------------
// Criterion 9: readout-noise mitigation.

void criterion_9(Report& r) {
  // Round trip through a five-qubit confusion channel.
  ConfusionModel m;
  m.p00 = {0.97, 0.92, 0.88, 0.95, 0.9};
  m.p11 = {0.93, 0.9, 0.96, 0.85, 0.94};
  OutcomeHistogram h;
  h.n_bits = 5;
  for (std::uint64_t k = 0; k < 32; ++k) {
    h.weights[k] = std::cos(0.37 * static_cast<double>(k)) + 1.5;
  }
  const OutcomeHistogram back = mitigate(apply_readout_noise(h, m), m);
  double rt_dev = 0.0;
  for (std::uint64_t k = 0; k < 32; ++k) {
    const auto it = back.weights.find(k);
    const double w = it == back.weights.end() ? 0.0 : it->second;
    rt_dev = std::max(rt_dev, std::abs(w - h.weights.at(k)));
  }
  r.clause(9, "noise channel round trip on 5 qubits", rt_dev < 1e-10,
           "max |dev| " + num(rt_dev));

  // Calibration accuracy at 1e5 shots per pattern.
  SimulatedReadoutDevice device;
  device.truth = m;
  const ConfusionModel est = calibrate(device, 100000, 17);
  double cal_dev = 0.0;
  for (int q = 0; q < 5; ++q) {
    cal_dev = std::max({cal_dev, std::abs(est.p00[q] - m.p00[q]),
                        std::abs(est.p11[q] - m.p11[q])});
  }
  r.clause(9, "calibration within 0.01 at 1e5 shots per pattern",
           cal_dev < 0.01, "max |dev| " + num(cal_dev));

  // Mitigated sweep must hug the exact curve tighter than the raw noisy one.
  CountingPlan plan{4, 1, {pi / 2}, CouplingLayout::AllToAll};
  SweepOptions exact_opt;
  const auto exact = staged_coupling_sweep(plan, CountingMode::PostselectAllZero, exact_opt);

  const ConfusionModel truth = uniform_confusion(5, 0.95, 0.90);
  SimulatedReadoutDevice sweep_device;
  sweep_device.truth = truth;
  const ConfusionModel calibrated = calibrate(sweep_device, 100000, 23);

  NoisySweepOptions raw_opt;
  raw_opt.n_shots = 1000;
  raw_opt.seed = 2000;
  raw_opt.theta_grid_points = 64;
  const auto raw = noisy_staged_sweep(plan, truth, raw_opt);

  // Mitigate with the calibrated model, as an experiment would.
  NoisySweepOptions mit_opt = raw_opt;
  mit_opt.mitigate = true;
  mit_opt.mitigate_before_postselect = true;
  const auto mit = noisy_staged_sweep(plan, calibrated, mit_opt);

  double raw_dev = 0.0, mit_dev = 0.0;
  for (int k = 0; k <= 4; ++k) {
    raw_dev = std::max(raw_dev, std::abs(raw[k].c2 - exact[k].c2));
    mit_dev = std::max(mit_dev, std::abs(mit[k].c2 - exact[k].c2));
  }
  r.clause(9, "mitigated sweep strictly closer to the exact curve",
           mit_dev < raw_dev,
           "max |dev| mitigated " + num(mit_dev) + " vs raw " + num(raw_dev));
}

// ---------------------------------------------------------------------------
// Criterion 10: fourteen qubits plus three ancillas end to end.

void criterion_10(Report& r) {
  const double t0 = now_seconds();
  const int n = 14;
  const CountingPlan plan = default_plan(n);  // 3 ancillas
  const CountingResult res = run_counting(plan, {}, CountingMode::PostselectAllZero);
  const double c2 = spin_observables(res.ensemble).c2;
  const double elapsed = now_seconds() - t0;
  const double want = (n + 2.0) / (4.0 * n);
  r.clause(10, "n=14 prepare -> count -> observe under 60 s", elapsed < 60.0,
           num(elapsed) + " s");
  r.clause(10, "n=14 post-selected c2 hits the projected closed form",
           std::abs(c2 - want) < 1e-10,
           "measured " + num(c2) + " (expected " + num(want) + ")");
}

}  // namespace

int main() {
  Report report;
  criterion_1(report);
  criterion_2(report);
  criterion_3(report);
  criterion_4(report);
  criterion_5(report);
  criterion_6(report);
  criterion_7(report);
  criterion_8(report);
  criterion_9(report);
  criterion_10(report);
  return report.summarize();
}
