// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "cohsim/ensemble.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace cohsim {

using nlohmann::json;

StateEnsemble ensemble_from_state(QuantumState state) {
  StateEnsemble e;
  e.members.push_back({1.0, std::move(state)});
  return e;
}

int ensemble_qubits(const StateEnsemble& ensemble) {
  if (ensemble.members.empty()) {
    throw std::invalid_argument("empty ensemble");
  }
  return ensemble.members.front().state.n_qubits;
}

void check_valid(const StateEnsemble& ensemble) {
  const int n = ensemble_qubits(ensemble);
  double total = 0.0;
  for (const StateEnsemble::Member& m : ensemble.members) {
    if (m.weight <= 0.0) throw std::invalid_argument("weights must be > 0");
    if (m.state.n_qubits != n) {
      throw std::invalid_argument("mixed qubit counts in ensemble");
    }
    check_valid(m.state);
    total += m.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("ensemble weights must sum to 1");
  }
}

std::string ensemble_to_json(const StateEnsemble& ensemble) {
  json members = json::array();
  for (const StateEnsemble::Member& m : ensemble.members) {
    json amps = json::array();
    for (const cplx& a : m.state.amplitudes) {
      amps.push_back({a.real(), a.imag()});
    }
    members.push_back({{"weight", m.weight}, {"amplitudes", amps}});
  }
  json j;
  j["n_qubits"] = ensemble_qubits(ensemble);
  j["members"] = members;
  return j.dump(2) + "\n";
}

StateEnsemble ensemble_from_json(const std::string& text) {
  const json j = json::parse(text);
  const int n = j.at("n_qubits").get<int>();
  StateEnsemble e;
  for (const json& jm : j.at("members")) {
    QuantumState s;
    s.n_qubits = n;
    for (const json& ja : jm.at("amplitudes")) {
      s.amplitudes.emplace_back(ja.at(0).get<double>(),
                                ja.at(1).get<double>());
    }
    e.members.push_back({jm.at("weight").get<double>(), std::move(s)});
  }
  check_valid(e);
  return e;
}

}  // namespace cohsim
