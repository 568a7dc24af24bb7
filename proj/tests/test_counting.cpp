// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cohsim/counting.hpp"
#include "cohsim/observables.hpp"
#include "cohsim/states.hpp"
#include "test_util.hpp"

using cohsim::CountingMode;
using cohsim::CountingPlan;
using cohsim::CountingResult;
using cohsim::CouplingLayout;
using cohsim::QuantumState;
using cohsim::StateEnsemble;
using std::numbers::pi;

namespace {
double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double max_fcs_column_diff(const cohsim::FcsDistribution& a,
                           const cohsim::FcsDistribution& b) {
  double worst = 0.0;
  for (std::size_t t = 0; t < a.probs.size(); ++t) {
    for (std::size_t i = 0; i < a.probs[t].size(); ++i) {
      worst = std::max(worst, std::abs(a.probs[t][i] - b.probs[t][i]));
    }
  }
  return worst;
}
}  // namespace

TEST_CASE("default plan halves the coupling phase per ancilla") {
  CountingPlan p = cohsim::default_plan(10);
  CHECK(p.n_system == 10);
  CHECK(p.n_ancillas == 3);
  REQUIRE(p.phis.size() == 3);
  CHECK(p.phis[0] == doctest::Approx(pi).epsilon(1e-15));
  CHECK(p.phis[1] == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(p.phis[2] == doctest::Approx(pi / 4).epsilon(1e-15));
  CHECK(cohsim::default_plan(4).n_ancillas == 2);
  CHECK(cohsim::default_plan(2).n_ancillas == 1);
}

TEST_CASE("post-selected counting equals direct sector projection") {
  for (int n : {2, 4, 6}) {
    CAPTURE(n);
    CountingPlan plan = cohsim::default_plan(n);
    CountingResult res = cohsim::run_counting(plan, {}, CountingMode::PostselectAllZero);
    REQUIRE(res.ensemble.members.size() == 1);

    const QuantumState target = cohsim::project_sz(cohsim::prepare_coherent(n, 0.0), 0.0);
    CHECK(cohsim::fidelity(res.ensemble.members[0].state, target) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // All-zero acceptance equals the half-filled sector weight.
    CHECK(res.success_probability ==
          doctest::Approx(binom(n, n / 2) / std::pow(2.0, n)).epsilon(1e-12));
    // Half-filling is the most likely sector, so acceptance beats 1/n here.
    CHECK(res.success_probability >= 1.0 / n);
  }
}

TEST_CASE("keep-all counting dephases the sectors when the filter is sharp") {
  // With 2^(ancillas) above the qubit count every sector pair decoheres and
  // the kept mixture is exactly the sector-dephased state.  One ancilla short,
  // sectors four apart stay coherent and the distributions drift.
  const int n = 6;
  const StateEnsemble dephased = cohsim::dephase_sz(cohsim::prepare_coherent(n, 0.0));
  const auto grid = cohsim::uniform_theta_grid(8);
  const auto want = cohsim::fcs_s_theta(dephased, grid);

  CountingPlan sharp{n, 3, {pi, pi / 2, pi / 4}, CouplingLayout::AllToAll};
  CountingResult res = cohsim::run_counting(sharp, {}, CountingMode::KeepAllOutcomes);
  CHECK(res.success_probability == doctest::Approx(1.0).epsilon(1e-12));
  double total = 0.0;
  for (const auto& m : res.ensemble.members) total += m.weight;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_fcs_column_diff(cohsim::fcs_s_theta(res.ensemble, grid), want) < 1e-12);

  CountingPlan blunt{n, 2, {pi, pi / 2}, CouplingLayout::AllToAll};
  CountingResult alias = cohsim::run_counting(blunt, {}, CountingMode::KeepAllOutcomes);
  CHECK(max_fcs_column_diff(cohsim::fcs_s_theta(alias.ensemble, grid), want) > 1e-6);
}

TEST_CASE("chain routing reproduces the all-to-all protocol") {
  CountingPlan chain{4, 2, {pi, pi / 2}, CouplingLayout::LinearChain};
  CountingPlan flat{4, 2, {pi, pi / 2}, CouplingLayout::AllToAll};
  CountingResult a = cohsim::run_counting(chain, {}, CountingMode::PostselectAllZero);
  CountingResult b = cohsim::run_counting(flat, {}, CountingMode::PostselectAllZero);
  CHECK(a.success_probability == doctest::Approx(b.success_probability).epsilon(1e-12));
  CHECK(cohsim::fidelity(a.ensemble.members[0].state, b.ensemble.members[0].state) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("chain schedule bookkeeping") {
  // Swap budget: coupling all n qubits with na sweeps costs n*na couplings
  // and n*na - 2 swaps (only the outermost two steps skip theirs).
  for (int n : {2, 4, 8, 12}) {
    for (int na = 1; na <= 3; ++na) {
      CAPTURE(n);
      CAPTURE(na);
      CountingPlan plan{n, na, std::vector<double>(na, pi), CouplingLayout::LinearChain};
      for (int a = 0; a < na; ++a) plan.phis[a] = pi / std::pow(2.0, a);
      const auto sched = cohsim::counting_schedule(plan, n);
      CHECK(sched.steps.size() == static_cast<std::size_t>(n * na));
      int swaps = 0;
      for (const auto& s : sched.steps) swaps += s.swap_after ? 1 : 0;
      CHECK(swaps == n * na - 2);
    }
  }
  // Partial coupling requires the all-to-all layout.
  CountingPlan chain{4, 1, {pi}, CouplingLayout::LinearChain};
  CHECK_THROWS_AS(cohsim::counting_schedule(chain, 2), std::invalid_argument);
}

TEST_CASE("staged sweep in exact mode matches the closed-form curve") {
  // One ancilla at phi = pi/2 on four qubits, coupling k = 0..4 of them.
  CountingPlan plan{4, 1, {pi / 2}, CouplingLayout::AllToAll};
  cohsim::SweepOptions opt;  // exact
  const auto points = cohsim::staged_coupling_sweep(plan, CountingMode::PostselectAllZero, opt);
  REQUIRE(points.size() == 5);

  const std::vector<double> want_prob = {1.0, 0.853553390593274, 0.75,
                                         0.676776695296637, 0.625};
  const std::vector<double> want_c2 = {0.3125, 0.285041260736239, 0.28125,
                                       0.302356794916776, 0.35};
  const std::vector<double> want_sx = {2.0, 1.853553390593274, 5.0 / 3.0,
                                       1.445902906222806, 1.2};
  for (int k = 0; k <= 4; ++k) {
    CAPTURE(k);
    CHECK(points[k].k == k);
    CHECK(points[k].success_probability == doctest::Approx(want_prob[k]).epsilon(1e-12));
    CHECK(points[k].c2 == doctest::Approx(want_c2[k]).epsilon(1e-9));
    CHECK(points[k].sx == doctest::Approx(want_sx[k]).epsilon(1e-9));
  }

  const std::string csv = cohsim::sweep_to_csv(points);
  CHECK(csv.rfind("k,C2,Sx,success_probability,mode\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}

TEST_CASE("sampled counting converges to the exact acceptance rate") {
  CountingPlan plan = cohsim::default_plan(4);
  CountingResult exact = cohsim::run_counting(plan, {}, CountingMode::PostselectAllZero);
  CountingResult sampled = cohsim::run_counting_sampled(
      plan, {}, CountingMode::PostselectAllZero, 20000, 3);
  const double p = exact.success_probability;  // 0.375
  const double band = 3.0 * std::sqrt(p * (1.0 - p) / 20000.0);
  CHECK(std::abs(sampled.success_probability - p) < band);
  // Conditional states are exact regardless of sampling.
  CHECK(cohsim::fidelity(sampled.ensemble.members[0].state,
                         exact.ensemble.members[0].state) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Determinism in the seed.
  CountingResult again = cohsim::run_counting_sampled(
      plan, {}, CountingMode::PostselectAllZero, 20000, 3);
  CHECK(again.success_probability == sampled.success_probability);
}

TEST_CASE("nonuniform preparation phases flow through the counting run") {
  // The protocol projects whatever equator state it is fed; with distinct
  // phases the post-selected state must match the directly projected one.
  const std::vector<double> thetas = {0.2, 1.1, 2.3, 0.7};
  CountingPlan plan = cohsim::default_plan(4);
  CountingResult res = cohsim::run_counting(plan, thetas, CountingMode::PostselectAllZero);
  const QuantumState target =
      cohsim::project_sz(cohsim::prepare_coherent(4, thetas), 0.0);
  CHECK(cohsim::fidelity(res.ensemble.members[0].state, target) ==
        doctest::Approx(1.0).epsilon(1e-12));
}
