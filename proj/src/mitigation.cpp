// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "cohsim/mitigation.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "cohsim/states.hpp"

namespace cohsim {

using nlohmann::json;

int model_qubits(const ConfusionModel& model) {
  if (model.p00.size() != model.p11.size() || model.p00.empty()) {
    throw std::invalid_argument("confusion model needs p00/p11 per qubit");
  }
  return static_cast<int>(model.p00.size());
}

void check_valid(const ConfusionModel& model) {
  model_qubits(model);
  for (std::size_t q = 0; q < model.p00.size(); ++q) {
    if (model.p00[q] < 0.0 || model.p00[q] > 1.0 || model.p11[q] < 0.0 ||
        model.p11[q] > 1.0) {
      throw std::invalid_argument("confusion entries must lie in [0, 1]");
    }
  }
}

ConfusionModel uniform_confusion(int n_qubits, double p00, double p11) {
  if (n_qubits < 1) throw std::invalid_argument("need at least one qubit");
  ConfusionModel model;
  model.p00.assign(n_qubits, p00);
  model.p11.assign(n_qubits, p11);
  check_valid(model);
  return model;
}

std::string confusion_to_json(const ConfusionModel& model) {
  check_valid(model);
  json j = json::object();
  for (std::size_t q = 0; q < model.p00.size(); ++q) {
    j[std::to_string(q)] = {{"p00", model.p00[q]}, {"p11", model.p11[q]}};
  }
  return j.dump(2) + "\n";
}

ConfusionModel confusion_from_json(const std::string& text) {
  const json j = json::parse(text);
  std::size_t n = 0;
  for (const auto& [key, entry] : j.items()) {
    if (key != "meta") ++n;  // tolerate a metadata block alongside the qubits
  }
  ConfusionModel model;
  model.p00.resize(n, -1.0);
  model.p11.resize(n, -1.0);
  for (const auto& [key, entry] : j.items()) {
    if (key == "meta") continue;
    const int q = std::stoi(key);
    if (q < 0 || q >= static_cast<int>(n)) {
      throw std::invalid_argument("confusion model qubits must be 0..n-1");
    }
    model.p00[q] = entry.at("p00").get<double>();
    model.p11[q] = entry.at("p11").get<double>();
  }
  check_valid(model);
  return model;
}

namespace {
constexpr int kMaxDenseBits = 24;

std::vector<double> dense_weights(const OutcomeHistogram& hist) {
  if (hist.n_bits < 1 || hist.n_bits > kMaxDenseBits) {
    throw std::invalid_argument("histogram bit count out of dense range");
  }
  std::vector<double> v(std::size_t{1} << hist.n_bits, 0.0);
  for (const auto& [key, w] : hist.weights) {
    if (key >= v.size()) {
      throw std::invalid_argument("histogram key exceeds n_bits");
    }
    v[key] = w;
  }
  return v;
}

OutcomeHistogram from_dense(const OutcomeHistogram& like,
                            const std::vector<double>& v) {
  OutcomeHistogram out = like;
  out.weights.clear();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0.0) out.weights[i] = v[i];
  }
  return out;
}

void check_model_for(const OutcomeHistogram& hist,
                     const ConfusionModel& model) {
  check_valid(model);
  if (model_qubits(model) != hist.n_bits) {
    throw std::invalid_argument(
        "confusion model and histogram disagree on bit count");
  }
}

// In-place per-qubit 2x2 action on a dense pattern vector:
//   new[r0] = m00 * v[r0] + m01 * v[r1]
//   new[r1] = m10 * v[r0] + m11 * v[r1]
void apply_factor(std::vector<double>& v, int q, double m00, double m01,
                  double m10, double m11) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t base = 0; base < v.size(); ++base) {
    if (base & bit) continue;
    const double v0 = v[base], v1 = v[base | bit];
    v[base] = m00 * v0 + m01 * v1;
    v[base | bit] = m10 * v0 + m11 * v1;
  }
}
}  // namespace

OutcomeHistogram apply_readout_noise(const OutcomeHistogram& hist,
                                     const ConfusionModel& model) {
  check_model_for(hist, model);
  std::vector<double> v = dense_weights(hist);
  for (int q = 0; q < hist.n_bits; ++q) {
    apply_factor(v, q, model.p00[q], 1.0 - model.p11[q], 1.0 - model.p00[q],
                 model.p11[q]);
  }
  return from_dense(hist, v);
}

OutcomeHistogram apply_readout_noise_sampled(const OutcomeHistogram& hist,
                                             const ConfusionModel& model,
                                             std::uint64_t seed) {
  check_model_for(hist, model);
  if (hist.n_shots == 0) {
    throw std::invalid_argument(
        "per-shot noise needs a shot histogram, not probabilities");
  }
  OutcomeHistogram out = hist;
  out.weights.clear();
  std::uint64_t shot = 0;
  for (const auto& [key, w] : hist.weights) {
    const double rounded = std::round(w);
    if (std::abs(w - rounded) > 1e-9 || rounded < 0.0) {
      throw std::invalid_argument("shot histogram weights must be counts");
    }
    for (std::uint64_t c = 0; c < static_cast<std::uint64_t>(rounded); ++c) {
      std::mt19937_64 rng = shot_rng(seed, shot++);
      std::uint64_t noisy = key;
      for (int q = 0; q < hist.n_bits; ++q) {
        const bool one = (key >> q) & 1u;
        const double flip = one ? 1.0 - model.p11[q] : 1.0 - model.p00[q];
        if (uniform01(rng) < flip) noisy ^= std::uint64_t{1} << q;
      }
      out.weights[noisy] += 1.0;
    }
  }
  return out;
}

OutcomeHistogram mitigate(const OutcomeHistogram& hist,
                          const ConfusionModel& model) {
  check_model_for(hist, model);
  std::vector<double> v = dense_weights(hist);
  for (int q = 0; q < hist.n_bits; ++q) {
    const double det = model.p00[q] + model.p11[q] - 1.0;
    if (std::abs(det) < 1e-9) {
      throw std::runtime_error("confusion block for qubit " +
                               std::to_string(q) + " is singular");
    }
    apply_factor(v, q, model.p11[q] / det, -(1.0 - model.p11[q]) / det,
                 -(1.0 - model.p00[q]) / det, model.p00[q] / det);
  }
  OutcomeHistogram out = from_dense(hist, v);
  out.mitigated = true;
  return out;
}

ConfusionModel submodel(const ConfusionModel& model,
                        const std::vector<int>& qubits) {
  const int n = model_qubits(model);
  ConfusionModel out;
  for (int q : qubits) {
    if (q < 0 || q >= n) throw std::invalid_argument("qubit out of range");
    out.p00.push_back(model.p00[q]);
    out.p11.push_back(model.p11[q]);
  }
  return out;
}

OutcomeHistogram SimulatedReadoutDevice::read(std::uint64_t prepared_bits,
                                              std::uint64_t n_shots,
                                              std::uint64_t seed) const {
  const int n = model_qubits(truth);
  if (n_shots == 0) throw std::invalid_argument("n_shots must be positive");
  OutcomeHistogram clean;
  clean.n_bits = n;
  clean.n_shots = n_shots;
  clean.seed = seed;
  clean.weights[prepared_bits] = static_cast<double>(n_shots);
  return apply_readout_noise_sampled(clean, truth, seed);
}

ConfusionModel calibrate(const SimulatedReadoutDevice& device,
                         std::uint64_t n_shots, std::uint64_t seed) {
  const int n = model_qubits(device.truth);
  // 0101... pattern: odd qubits prepared 1; the complement covers the rest.
  std::uint64_t pattern = 0;
  for (int q = 1; q < n; q += 2) pattern |= std::uint64_t{1} << q;
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << n) - 1;
  const OutcomeHistogram run_a = device.read(pattern, n_shots, seed);
  const OutcomeHistogram run_b =
      device.read(pattern ^ all, n_shots, seed + 1);

  ConfusionModel model;
  model.p00.assign(n, 0.0);
  model.p11.assign(n, 0.0);
  for (int q = 0; q < n; ++q) {
    const bool one_in_a = (pattern >> q) & 1u;
    const OutcomeHistogram& zero_run = one_in_a ? run_b : run_a;
    const OutcomeHistogram& one_run = one_in_a ? run_a : run_b;
    double read0 = 0.0, read1 = 0.0;
    for (const auto& [key, w] : zero_run.weights) {
      if (!((key >> q) & 1u)) read0 += w;
    }
    for (const auto& [key, w] : one_run.weights) {
      if ((key >> q) & 1u) read1 += w;
    }
    model.p00[q] = read0 / static_cast<double>(n_shots);
    model.p11[q] = read1 / static_cast<double>(n_shots);
  }
  return model;
}

namespace {
// Same stream-splitting mix as the noiseless sweep, so runs with the noise
// channel switched off draw identical shots.
std::uint64_t mixed_seed(std::uint64_t seed, std::uint64_t salt) {
  return seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
}
constexpr std::uint64_t kNoiseStream = 0x4000000000000000ULL;
}  // namespace

std::vector<SweepPoint> noisy_staged_sweep(const CountingPlan& plan,
                                           const ConfusionModel& model,
                                           const NoisySweepOptions& options) {
  validate_plan(plan);
  CountingPlan ata = plan;
  ata.layout = CouplingLayout::AllToAll;
  const int n = ata.n_system;
  const int na = ata.n_ancillas;
  if (model_qubits(model) != n + na) {
    throw std::invalid_argument(
        "confusion model must cover system plus ancilla bits");
  }
  if (options.n_shots == 0) {
    throw std::invalid_argument("n_shots must be positive");
  }
  const int grid = options.theta_grid_points;
  if (grid < 5) {
    throw std::invalid_argument("c2 reconstruction needs at least 5 grid angles");
  }

  std::vector<int> system_slots(n);
  for (int q = 0; q < n; ++q) system_slots[q] = q;
  const ConfusionModel system_model = submodel(model, system_slots);
  const std::uint64_t mask_system = (std::uint64_t{1} << n) - 1;
  constexpr double kPi = 3.14159265358979323846;

  std::vector<SweepPoint> points;
  for (int k = 0; k <= n; ++k) {
    SweepPoint point;
    point.k = k;
    point.mode = options.mitigate
                     ? (options.mitigate_before_postselect
                            ? "noisy+mitigated(before)"
                            : "noisy+mitigated(after)")
                     : "noisy";
    double second_moment_sum = 0.0;
    double accepted_total = 0.0;
    for (int t = 0; t < grid; ++t) {
      const double theta = 2.0 * kPi * t / grid;
      const CountingCircuit cc =
          counting_measurement_circuit(ata, {}, theta, false, k);
      const std::uint64_t salt = static_cast<std::uint64_t>(k) * grid + t;
      OutcomeHistogram hist =
          sample_shots(cc.circuit, options.n_shots, mixed_seed(options.seed, salt));
      hist = apply_readout_noise_sampled(
          hist, model, mixed_seed(options.seed, kNoiseStream + salt));
      if (options.mitigate && options.mitigate_before_postselect) {
        hist = mitigate(hist, model);
      }
      // Ancilla post-selection: keep the all-zero pattern, reduced to the
      // system bits.
      OutcomeHistogram selected;
      selected.n_bits = n;
      selected.n_shots = hist.n_shots;
      selected.mitigated = hist.mitigated;
      for (const auto& [key, w] : hist.weights) {
        if ((key >> n) != 0) continue;
        selected.weights[key & mask_system] += w;
      }
      if (options.mitigate && !options.mitigate_before_postselect) {
        selected = mitigate(selected, system_model);
      }
      double v_sum = 0.0, v2_sum = 0.0, accepted = 0.0;
      for (const auto& [key, w] : selected.weights) {
        const double v = sz_of_weight(n, std::popcount(key));
        v_sum += w * v;
        v2_sum += w * v * v;
        accepted += w;
      }
      if (std::abs(accepted) < 1e-9) {
        throw std::runtime_error("no accepted weight at a grid angle");
      }
      second_moment_sum += v2_sum / accepted;
      if (t == 0) point.sx = v_sum / accepted;
      accepted_total += accepted;
    }
    point.c2 = 2.0 * second_moment_sum /
               (grid * static_cast<double>(n) * static_cast<double>(n));
    point.success_probability =
        accepted_total /
        (static_cast<double>(grid) * static_cast<double>(options.n_shots));
    points.push_back(point);
  }
  return points;
}

}  // namespace cohsim
