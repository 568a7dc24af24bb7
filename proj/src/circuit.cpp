// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "cohsim/circuit.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cohsim/angles.hpp"

namespace cohsim {

using nlohmann::json;

void validate_circuit(const Circuit& circuit) {
  if (circuit.n_qubits < 1) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::MEASURE) {
      throw std::invalid_argument(
          "MEASURE belongs in circuit.measurements, not gates");
    }
    if (static_cast<int>(g.qubits.size()) != gate_arity(g.kind)) {
      throw std::invalid_argument("gate wire count mismatch");
    }
    for (int q : g.qubits) {
      if (q < 0 || q >= circuit.n_qubits) {
        throw std::invalid_argument("gate wire out of range");
      }
    }
    if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) {
      throw std::invalid_argument("two-qubit gate needs distinct wires");
    }
  }
  std::set<int> slots, measured;
  for (const Measurement& m : circuit.measurements) {
    if (m.qubit < 0 || m.qubit >= circuit.n_qubits) {
      throw std::invalid_argument("measured qubit out of range");
    }
    if (m.slot < 0 || !slots.insert(m.slot).second) {
      throw std::invalid_argument("measurement slots must be unique");
    }
    if (!measured.insert(m.qubit).second) {
      throw std::invalid_argument("qubit measured twice");
    }
  }
}

bool has_symbolic_angles(const Circuit& circuit) {
  for (const Gate& g : circuit.gates) {
    if (g.symbol) return true;
  }
  return false;
}

Circuit bind_symbol(const Circuit& circuit, const std::string& name,
                    double value) {
  Circuit out = circuit;
  for (Gate& g : out.gates) {
    if (g.symbol && *g.symbol == name) {
      g.angle = value;
      g.symbol.reset();
    }
  }
  return out;
}

QuantumState run_circuit(const Circuit& circuit) {
  return run_circuit(circuit, zero_state(circuit.n_qubits));
}

QuantumState run_circuit(const Circuit& circuit, QuantumState initial) {
  validate_circuit(circuit);
  if (initial.n_qubits != circuit.n_qubits) {
    throw std::invalid_argument("initial state size mismatch");
  }
  for (const Gate& g : circuit.gates) apply_gate(initial, g);
  return initial;
}

std::string gate_text(const Gate& gate) {
  std::ostringstream out;
  out << gate_name(gate.kind);
  if (gate_has_angle(gate.kind)) {
    out << '(' << (gate.symbol ? *gate.symbol : format_angle(gate.angle))
        << ')';
  }
  for (int q : gate.qubits) out << ' ' << q;
  return out.str();
}

std::string circuit_text(const Circuit& circuit) {
  std::ostringstream out;
  for (const Gate& g : circuit.gates) out << gate_text(g) << '\n';
  return out.str();
}

std::string circuit_to_json(const Circuit& circuit) {
  json gates = json::array();
  for (const Gate& g : circuit.gates) {
    json jg;
    jg["kind"] = gate_name(g.kind);
    jg["qubits"] = g.qubits;
    if (gate_has_angle(g.kind)) {
      if (g.symbol) {
        jg["symbol"] = *g.symbol;
      } else {
        jg["angle"] = g.angle;
      }
    }
    gates.push_back(jg);
  }
  json meas = json::array();
  for (const Measurement& m : circuit.measurements) {
    meas.push_back({{"qubit", m.qubit}, {"slot", m.slot}});
  }
  json j;
  j["n_qubits"] = circuit.n_qubits;
  j["gates"] = gates;
  j["measurements"] = meas;
  return j.dump(2) + "\n";
}

Circuit circuit_from_json(const std::string& text) {
  const json j = json::parse(text);
  Circuit c;
  c.n_qubits = j.at("n_qubits").get<int>();
  for (const json& jg : j.at("gates")) {
    Gate g;
    g.kind = gate_kind_from_name(jg.at("kind").get<std::string>());
    g.qubits = jg.at("qubits").get<std::vector<int>>();
    if (jg.contains("symbol")) {
      g.symbol = jg.at("symbol").get<std::string>();
    } else if (jg.contains("angle")) {
      if (jg.at("angle").is_string()) {
        g.angle = parse_angle(jg.at("angle").get<std::string>());
      } else {
        g.angle = jg.at("angle").get<double>();
      }
    }
    c.gates.push_back(std::move(g));
  }
  if (j.contains("measurements")) {
    for (const json& jm : j.at("measurements")) {
      c.measurements.push_back(
          {jm.at("qubit").get<int>(), jm.at("slot").get<int>()});
    }
  }
  validate_circuit(c);
  return c;
}

std::string state_to_json(const QuantumState& state) {
  json amps = json::array();
  for (const cplx& a : state.amplitudes) {
    amps.push_back({a.real(), a.imag()});
  }
  json j;
  j["n_qubits"] = state.n_qubits;
  j["amplitudes"] = amps;
  return j.dump(2) + "\n";
}

QuantumState state_from_json(const std::string& text) {
  const json j = json::parse(text);
  QuantumState s;
  s.n_qubits = j.at("n_qubits").get<int>();
  for (const json& ja : j.at("amplitudes")) {
    s.amplitudes.emplace_back(ja.at(0).get<double>(), ja.at(1).get<double>());
  }
  check_valid(s);
  return s;
}

}  // namespace cohsim
