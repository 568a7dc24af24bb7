// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "cohsim/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace cohsim {

using nlohmann::json;

std::string bitstring(std::uint64_t key, int n_bits) {
  std::string out(n_bits, '0');
  for (int s = 0; s < n_bits; ++s) {
    if ((key >> s) & 1u) out[s] = '1';  // slot 0 leftmost
  }
  return out;
}

std::uint64_t key_from_bitstring(const std::string& bits) {
  if (bits.size() > 63) throw std::invalid_argument("bitstring too long");
  std::uint64_t key = 0;
  for (std::size_t s = 0; s < bits.size(); ++s) {
    if (bits[s] == '1') {
      key |= std::uint64_t{1} << s;
    } else if (bits[s] != '0') {
      throw std::invalid_argument("bitstring must be 0/1: " + bits);
    }
  }
  return key;
}

double histogram_total(const OutcomeHistogram& hist) {
  double total = 0.0;
  for (const auto& [key, w] : hist.weights) total += w;
  return total;
}

std::string histogram_to_json(const OutcomeHistogram& hist) {
  json counts = json::object();
  for (const auto& [key, w] : hist.weights) {
    counts[bitstring(key, hist.n_bits)] = w;
  }
  json j;
  j["n_bits"] = hist.n_bits;
  j["n_shots"] = hist.n_shots;
  j["seed"] = hist.seed;
  j["mitigated"] = hist.mitigated;
  j["counts"] = counts;
  return j.dump(2) + "\n";
}

OutcomeHistogram histogram_from_json(const std::string& text) {
  const json j = json::parse(text);
  OutcomeHistogram h;
  h.n_bits = j.at("n_bits").get<int>();
  h.n_shots = j.value("n_shots", std::uint64_t{0});
  h.seed = j.value("seed", std::uint64_t{0});
  h.mitigated = j.value("mitigated", false);
  for (const auto& [bits, w] : j.at("counts").items()) {
    if (static_cast<int>(bits.size()) != h.n_bits) {
      throw std::invalid_argument("bitstring length mismatch in histogram");
    }
    h.weights[key_from_bitstring(bits)] = w.get<double>();
  }
  return h;
}

std::mt19937_64 shot_rng(std::uint64_t seed, std::uint64_t shot) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shot),
                    static_cast<std::uint32_t>(shot >> 32)};
  return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::pair<int, QuantumState> measure_qubit(const QuantumState& state, int q,
                                           std::uint64_t seed) {
  if (q < 0 || q >= state.n_qubits) {
    throw std::invalid_argument("measured qubit out of range");
  }
  const std::size_t bit = std::size_t{1} << q;
  double p1 = 0.0;
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    if (i & bit) p1 += std::norm(state.amplitudes[i]);
  }
  const double total = norm_sq(state);
  std::mt19937_64 rng = shot_rng(seed, 0);
  const int outcome = uniform01(rng) < (total - p1) / total ? 0 : 1;
  auto [prob, collapsed] = postselect(state, q, outcome);
  return {outcome, std::move(collapsed)};
}

std::pair<double, QuantumState> postselect(const QuantumState& state, int q,
                                           int bit) {
  if (q < 0 || q >= state.n_qubits) {
    throw std::invalid_argument("postselected qubit out of range");
  }
  if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1");
  const std::size_t mask = std::size_t{1} << q;
  const std::size_t want = bit ? mask : 0u;
  QuantumState out = state;
  double kept = 0.0, total = 0.0;
  for (std::size_t i = 0; i < out.amplitudes.size(); ++i) {
    const double w2 = std::norm(out.amplitudes[i]);
    total += w2;
    if ((i & mask) == want) {
      kept += w2;
    } else {
      out.amplitudes[i] = cplx{0.0, 0.0};
    }
  }
  const double prob = total > 0.0 ? kept / total : 0.0;
  if (prob < 1e-15) {
    throw std::runtime_error("impossible branch: qubit " + std::to_string(q) +
                             " = " + std::to_string(bit));
  }
  const double inv = 1.0 / std::sqrt(kept);
  for (cplx& a : out.amplitudes) a *= inv;
  return {prob, std::move(out)};
}

std::vector<double> slot_probabilities(const QuantumState& state,
                                       const std::vector<Measurement>& slots) {
  if (slots.empty()) throw std::invalid_argument("no measurements");
  int max_slot = 0;
  for (const Measurement& m : slots) max_slot = std::max(max_slot, m.slot);
  const int n_bits = max_slot + 1;
  std::vector<double> probs(std::size_t{1} << n_bits, 0.0);
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    const double w2 = std::norm(state.amplitudes[i]);
    if (w2 == 0.0) continue;
    std::uint64_t key = 0;
    for (const Measurement& m : slots) {
      key |= ((i >> m.qubit) & 1u) << m.slot;
    }
    probs[key] += w2;
  }
  return probs;
}

namespace {
OutcomeHistogram sample_from_probs(const std::vector<double>& probs,
                                   int n_bits, std::uint64_t n_shots,
                                   std::uint64_t seed) {
  std::vector<double> cumulative(probs.size());
  double run = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    run += probs[i];
    cumulative[i] = run;
  }
  OutcomeHistogram hist;
  hist.n_bits = n_bits;
  hist.n_shots = n_shots;
  hist.seed = seed;
  for (std::uint64_t shot = 0; shot < n_shots; ++shot) {
    std::mt19937_64 rng = shot_rng(seed, shot);
    const double u = uniform01(rng) * run;
    const std::size_t idx = static_cast<std::size_t>(
        std::lower_bound(cumulative.begin(), cumulative.end(), u) -
        cumulative.begin());
    hist.weights[std::min(idx, probs.size() - 1)] += 1.0;
  }
  return hist;
}

int slot_count(const Circuit& circuit) {
  int max_slot = -1;
  for (const Measurement& m : circuit.measurements) {
    max_slot = std::max(max_slot, m.slot);
  }
  return max_slot + 1;
}
}  // namespace

OutcomeHistogram sample_shots(const Circuit& circuit, std::uint64_t n_shots,
                              std::uint64_t seed) {
  return sample_shots(circuit, zero_state(circuit.n_qubits), n_shots, seed);
}

OutcomeHistogram sample_shots(const Circuit& circuit,
                              const QuantumState& initial,
                              std::uint64_t n_shots, std::uint64_t seed) {
  if (n_shots == 0) throw std::invalid_argument("n_shots must be positive");
  if (circuit.measurements.empty()) {
    throw std::invalid_argument("circuit has no measurements to sample");
  }
  const QuantumState final_state = run_circuit(circuit, initial);
  const std::vector<double> probs =
      slot_probabilities(final_state, circuit.measurements);
  return sample_from_probs(probs, slot_count(circuit), n_shots, seed);
}

OutcomeHistogram exact_histogram(const Circuit& circuit) {
  return exact_histogram(circuit, zero_state(circuit.n_qubits));
}

OutcomeHistogram exact_histogram(const Circuit& circuit,
                                 const QuantumState& initial) {
  if (circuit.measurements.empty()) {
    throw std::invalid_argument("circuit has no measurements");
  }
  const QuantumState final_state = run_circuit(circuit, initial);
  const std::vector<double> probs =
      slot_probabilities(final_state, circuit.measurements);
  OutcomeHistogram hist;
  hist.n_bits = slot_count(circuit);
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] > 0.0) hist.weights[i] = probs[i];
  }
  return hist;
}

}  // namespace cohsim
