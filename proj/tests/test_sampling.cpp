// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "cohsim/circuit.hpp"
#include "cohsim/gates.hpp"
#include "cohsim/sampling.hpp"
#include "cohsim/state.hpp"

using cohsim::Circuit;
using cohsim::OutcomeHistogram;

namespace {
// Bell pair |00> + |11> built from the native-adjacent set: H = RZ RX RZ is
// not needed here, plain H and CZ are fine for a sampling fixture.
Circuit bell_circuit() {
  Circuit c;
  c.n_qubits = 2;
  c.gates = {cohsim::h(0), cohsim::h(1), cohsim::cz(0, 1), cohsim::h(1)};
  c.measurements = {{0, 0}, {1, 1}};
  return c;
}

double total_variation(const OutcomeHistogram& shots, const OutcomeHistogram& exact) {
  double tv = 0.0;
  const double n = static_cast<double>(shots.n_shots);
  for (const auto& [key, prob] : exact.weights) {
    const auto it = shots.weights.find(key);
    const double freq = it == shots.weights.end() ? 0.0 : it->second / n;
    tv += std::abs(freq - prob);
  }
  for (const auto& [key, count] : shots.weights) {
    if (!exact.weights.count(key)) tv += count / n;
  }
  return tv / 2.0;
}
}  // namespace

TEST_CASE("exact histogram of a Bell pair is a two-point distribution") {
  OutcomeHistogram h = cohsim::exact_histogram(bell_circuit());
  CHECK(h.n_shots == 0);
  REQUIRE(h.weights.size() == 2);
  CHECK(h.weights.at(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(h.weights.at(3) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(cohsim::histogram_total(h) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("shot sampling is reproducible for a fixed seed") {
  const Circuit c = bell_circuit();
  OutcomeHistogram a = cohsim::sample_shots(c, 2000, 42);
  OutcomeHistogram b = cohsim::sample_shots(c, 2000, 42);
  CHECK(a.weights == b.weights);
  CHECK(cohsim::histogram_total(a) == doctest::Approx(2000.0));

  OutcomeHistogram other = cohsim::sample_shots(c, 2000, 43);
  CHECK(a.weights != other.weights);  // astronomically unlikely to collide
}

TEST_CASE("shot frequencies converge to the exact distribution") {
  const Circuit c = bell_circuit();
  const OutcomeHistogram exact = cohsim::exact_histogram(c);
  const OutcomeHistogram shots = cohsim::sample_shots(c, 20000, 7);
  // Only the two Bell outcomes may appear.
  for (const auto& [key, count] : shots.weights) {
    CHECK((key == 0 || key == 3));
    (void)count;
  }
  CHECK(total_variation(shots, exact) < 4.0 / std::sqrt(20000.0));
}

TEST_CASE("measurement slots remap qubits to classical bits") {
  // Measure qubit 1 into slot 0 and qubit 0 into slot 1: preparing |q1 q0>=|10>
  // yields classical key 1 (slot 0 set), bitstring "10" (slot 0 leftmost).
  Circuit c;
  c.n_qubits = 2;
  c.measurements = {{1, 0}, {0, 1}};
  OutcomeHistogram h = cohsim::exact_histogram(c, cohsim::basis_state(2, 2));
  REQUIRE(h.weights.size() == 1);
  CHECK(h.weights.begin()->first == 1);
  CHECK(cohsim::bitstring(h.weights.begin()->first, 2) == "10");
  CHECK(cohsim::key_from_bitstring("10") == 1);
}

TEST_CASE("histogram JSON round trip") {
  OutcomeHistogram h;
  h.n_bits = 3;
  h.n_shots = 10;
  h.seed = 99;
  h.weights = {{0, 4.0}, {5, 6.0}};
  OutcomeHistogram back = cohsim::histogram_from_json(cohsim::histogram_to_json(h));
  CHECK(back.n_bits == 3);
  CHECK(back.n_shots == 10);
  CHECK(back.seed == 99);
  CHECK_FALSE(back.mitigated);
  CHECK(back.weights == h.weights);
}

TEST_CASE("measure_qubit collapses consistently") {
  cohsim::QuantumState plus = cohsim::zero_state(1);
  plus.amplitudes = {std::sqrt(0.5), std::sqrt(0.5)};
  auto [bit, collapsed] = cohsim::measure_qubit(plus, 0, 5);
  CHECK((bit == 0 || bit == 1));
  CHECK(std::abs(collapsed.amplitudes[bit]) == doctest::Approx(1.0).epsilon(1e-12));
  // Same seed, same outcome.
  auto [bit2, collapsed2] = cohsim::measure_qubit(plus, 0, 5);
  CHECK(bit == bit2);
}
