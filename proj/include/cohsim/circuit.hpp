// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "cohsim/gates.hpp"
#include "cohsim/state.hpp"

namespace cohsim {

// Terminal measurement: qubit's Z-basis outcome lands in classical bit `slot`.
struct Measurement {
  int qubit = 0;
  int slot = 0;
};

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
  std::vector<Measurement> measurements;
};

// Checks wire ranges, slot uniqueness, measured-qubit uniqueness, and that no
// MEASURE kind appears in `gates` (measurements are terminal and live in
// `measurements`).  Throws std::invalid_argument.
void validate_circuit(const Circuit& circuit);

// True if any gate still carries an unbound symbolic angle.
bool has_symbolic_angles(const Circuit& circuit);

// Returns a copy with every gate whose symbol == name bound to `value`.
Circuit bind_symbol(const Circuit& circuit, const std::string& name,
                    double value);

// Applies all gates (ignoring `measurements`) to `initial`; returns the final
// state.  `initial` defaults to |0...0>.
QuantumState run_circuit(const Circuit& circuit);
QuantumState run_circuit(const Circuit& circuit, QuantumState initial);

// One instruction per line, e.g. "CPHASE(3*pi/2) 2 1" / "RX(pi/2) 0", in gate
// order.  Measurements are not included; see the native-gate exporter for a
// full program listing.
std::string circuit_text(const Circuit& circuit);

// Formats a single gate in the same style.
std::string gate_text(const Gate& gate);

// JSON round trip.  Schema: {"n_qubits": int, "gates": [{"kind": str,
// "qubits": [int...], "angle": double | "symbol": str}], "measurements":
// [{"qubit": int, "slot": int}]}.
std::string circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const std::string& text);

// State serialization: JSON array of [re, im] pairs indexed little-endian.
std::string state_to_json(const QuantumState& state);
QuantumState state_from_json(const std::string& text);

}  // namespace cohsim
