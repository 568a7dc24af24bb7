// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "cohsim/state.hpp"

namespace cohsim {

// Classical mixture of pure states: weights > 0, summing to 1 (within 1e-12),
// all members on the same qubit count.
struct StateEnsemble {
  struct Member {
    double weight = 1.0;
    QuantumState state;
  };
  std::vector<Member> members;
};

StateEnsemble ensemble_from_state(QuantumState state);

int ensemble_qubits(const StateEnsemble& ensemble);

void check_valid(const StateEnsemble& ensemble);

// JSON: {"n_qubits":, "members": [{"weight":, "amplitudes": [[re,im],...]}]}.
std::string ensemble_to_json(const StateEnsemble& ensemble);
StateEnsemble ensemble_from_json(const std::string& text);

}  // namespace cohsim
