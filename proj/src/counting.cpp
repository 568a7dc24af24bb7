// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "cohsim/counting.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cohsim/observables.hpp"
#include "cohsim/states.hpp"

namespace cohsim {

namespace {
constexpr double kPi = std::numbers::pi;

std::uint64_t mixed_seed(std::uint64_t seed, std::uint64_t salt) {
  return seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
}

int resolve_k(const CountingPlan& plan, int k) {
  if (k < 0) return plan.n_system;
  if (k > plan.n_system) {
    throw std::invalid_argument("cannot couple more qubits than the system");
  }
  return k;
}
}  // namespace

CountingPlan default_plan(int n_system, CouplingLayout layout) {
  if (n_system < 2) {
    throw std::invalid_argument("counting needs at least two system qubits");
  }
  CountingPlan plan;
  plan.n_system = n_system;
  plan.n_ancillas = static_cast<int>(std::floor(std::log2(n_system)));
  plan.layout = layout;
  for (int a = 0; a < plan.n_ancillas; ++a) {
    plan.phis.push_back(kPi / static_cast<double>(1 << a));
  }
  return plan;
}

void validate_plan(const CountingPlan& plan) {
  if (plan.n_system < 2) {
    throw std::invalid_argument("plan needs at least two system qubits");
  }
  if (plan.n_ancillas < 1) {
    throw std::invalid_argument("plan needs at least one ancilla");
  }
  if (static_cast<int>(plan.phis.size()) != plan.n_ancillas) {
    throw std::invalid_argument("plan needs one phi per ancilla");
  }
  for (double phi : plan.phis) {
    if (!(std::abs(phi) > 1e-12)) {
      throw std::invalid_argument("coupling angles must be nonzero");
    }
  }
}

CountingSchedule counting_schedule(const CountingPlan& plan, int k) {
  validate_plan(plan);
  k = resolve_k(plan, k);
  const int n = plan.n_system;
  const int na = plan.n_ancillas;
  CountingSchedule sched;
  sched.coupled_qubits = k;
  sched.n_wires = n + na;
  sched.initial_system_wire.resize(n);
  sched.initial_ancilla_wire.resize(na);

  if (plan.layout == CouplingLayout::AllToAll) {
    for (int j = 0; j < n; ++j) sched.initial_system_wire[j] = j;
    for (int a = 0; a < na; ++a) sched.initial_ancilla_wire[a] = n + a;
    for (int a = 0; a < na; ++a) {
      for (int i = 0; i < k; ++i) {
        sched.steps.push_back({a, i, n + a, i, false});
      }
    }
    sched.final_system_wire = sched.initial_system_wire;
    sched.final_ancilla_wire = sched.initial_ancilla_wire;
    return sched;
  }

  // Linear chain: [a_last, ..., a_1, q0, a_0, q1, ..., q_{n-1}].
  if (k != n) {
    throw std::invalid_argument(
        "partial coupling is only supported on the all-to-all layout");
  }
  sched.initial_system_wire[0] = na - 1;
  for (int i = 1; i < n; ++i) sched.initial_system_wire[i] = na + i;
  sched.initial_ancilla_wire[0] = na;
  for (int a = 1; a < na; ++a) sched.initial_ancilla_wire[a] = na - 1 - a;

  std::vector<int> sys_wire = sched.initial_system_wire;
  std::vector<int> anc_wire = sched.initial_ancilla_wire;
  for (int a = 0; a < na; ++a) {
    for (int i = 0; i < n; ++i) {
      const int partner = sys_wire[i];
      const int aw = anc_wire[a];
      if (std::abs(partner - aw) != 1) {
        throw std::runtime_error("chain schedule lost adjacency");
      }
      // Only the first coupling of the first sweep and the last coupling of
      // the last sweep leave the pair in place.
      const bool swap_after = !((a == 0 && i == 0) || (a == na - 1 && i == n - 1));
      sched.steps.push_back({a, i, aw, partner, swap_after});
      if (swap_after) {
        sys_wire[i] = aw;
        anc_wire[a] = partner;
      }
    }
  }
  sched.final_system_wire = sys_wire;
  sched.final_ancilla_wire = anc_wire;
  return sched;
}

namespace {
// Equator preparation, optional phase profile, and the coupling ladder.
void emit_counting_core(Circuit& circuit, const CountingSchedule& sched,
                        const CountingPlan& plan,
                        const std::vector<double>& thetas) {
  const int n = plan.n_system;
  if (!thetas.empty() && static_cast<int>(thetas.size()) != n) {
    throw std::invalid_argument("need one theta per system qubit");
  }
  for (int j = 0; j < n; ++j) {
    circuit.gates.push_back(rx(sched.initial_system_wire[j], kPi / 2.0));
  }
  for (int a = 0; a < plan.n_ancillas; ++a) {
    circuit.gates.push_back(rx(sched.initial_ancilla_wire[a], kPi / 2.0));
  }
  if (!thetas.empty()) {
    for (int j = 0; j < n; ++j) {
      circuit.gates.push_back(rz(sched.initial_system_wire[j], thetas[j]));
    }
  }
  for (const CouplingStep& step : sched.steps) {
    const double phi = plan.phis[step.ancilla];
    circuit.gates.push_back(rz(step.ancilla_wire, -phi / 2.0));
    circuit.gates.push_back(cphase(step.partner_wire, step.ancilla_wire, phi));
    if (step.swap_after) {
      circuit.gates.push_back(swap(step.partner_wire, step.ancilla_wire));
    }
  }
}
}  // namespace

CountingCircuit build_counting_circuit(const CountingPlan& plan,
                                       const std::vector<double>& thetas,
                                       int k) {
  const CountingSchedule sched = counting_schedule(plan, k);
  CountingCircuit cc;
  cc.circuit.n_qubits = sched.n_wires;
  cc.system_wires = sched.final_system_wire;
  cc.ancilla_wires = sched.final_ancilla_wire;
  cc.coupled_qubits = sched.coupled_qubits;
  emit_counting_core(cc.circuit, sched, plan, thetas);
  for (int a = 0; a < plan.n_ancillas; ++a) {
    cc.circuit.gates.push_back(rx(cc.ancilla_wires[a], -kPi / 2.0));
    cc.circuit.measurements.push_back({cc.ancilla_wires[a], a});
  }
  validate_circuit(cc.circuit);
  return cc;
}

CountingCircuit counting_measurement_circuit(const CountingPlan& plan,
                                             const std::vector<double>& thetas,
                                             double probe_theta, bool symbolic,
                                             int k) {
  const CountingSchedule sched = counting_schedule(plan, k);
  CountingCircuit cc;
  cc.circuit.n_qubits = sched.n_wires;
  cc.system_wires = sched.final_system_wire;
  cc.ancilla_wires = sched.final_ancilla_wire;
  cc.coupled_qubits = sched.coupled_qubits;
  emit_counting_core(cc.circuit, sched, plan, thetas);
  const int n = plan.n_system;
  for (int j = 0; j < n; ++j) {
    // Hardware readout angle; binding -t probes the logical S_t.
    cc.circuit.gates.push_back(
        symbolic ? rz_symbolic(cc.system_wires[j], "theta")
                 : rz(cc.system_wires[j], -probe_theta));
  }
  for (int j = 0; j < n; ++j) {
    cc.circuit.gates.push_back(rx(cc.system_wires[j], -kPi / 2.0));
  }
  for (int a = 0; a < plan.n_ancillas; ++a) {
    cc.circuit.gates.push_back(rx(cc.ancilla_wires[a], -kPi / 2.0));
  }
  for (int j = 0; j < n; ++j) {
    cc.circuit.measurements.push_back({cc.system_wires[j], j});
  }
  for (int a = 0; a < plan.n_ancillas; ++a) {
    cc.circuit.measurements.push_back({cc.ancilla_wires[a], n + a});
  }
  validate_circuit(cc.circuit);
  return cc;
}

namespace {
// Undoes the -pi/2 phase the RX(pi/2) preparation leaves relative to the
// target equator profile, returning the system to the logical frame.
void apply_frame_fix(QuantumState& state) {
  const std::array<cplx, 4> m{std::polar(1.0, -kPi / 4.0), 0.0, 0.0,
                              std::polar(1.0, kPi / 4.0)};  // RZ(pi/2)
  for (int q = 0; q < state.n_qubits; ++q) apply_1q(state, m, q);
}

// Conditional logical-frame system state for one ancilla pattern.
// Returns the branch probability, or 0 if the branch is impossible.
double conditional_state(const QuantumState& full, const CountingCircuit& cc,
                         std::uint64_t pattern, QuantumState* out) {
  QuantumState branch = full;
  double prob = 1.0;
  for (std::size_t a = 0; a < cc.ancilla_wires.size(); ++a) {
    const int bit = static_cast<int>((pattern >> a) & 1u);
    try {
      auto [p, next] = postselect(branch, cc.ancilla_wires[a], bit);
      prob *= p;
      branch = std::move(next);
    } catch (const std::runtime_error&) {
      return 0.0;
    }
  }
  std::uint64_t dropped_bits = 0;
  for (std::size_t a = 0; a < cc.ancilla_wires.size(); ++a) {
    dropped_bits |= ((pattern >> a) & 1u) << cc.ancilla_wires[a];
  }
  *out = extract_qubits(branch, cc.system_wires, dropped_bits);
  apply_frame_fix(*out);
  return prob;
}
}  // namespace

CountingResult run_counting(const CountingPlan& plan,
                            const std::vector<double>& thetas,
                            CountingMode mode, int k) {
  const CountingCircuit cc = build_counting_circuit(plan, thetas, k);
  const QuantumState full = run_circuit(cc.circuit);
  CountingResult result;
  if (mode == CountingMode::PostselectAllZero) {
    QuantumState sys;
    const double prob = conditional_state(full, cc, 0, &sys);
    if (prob == 0.0) {
      throw std::runtime_error("all-zero ancilla pattern is impossible");
    }
    result.ensemble.members.push_back({1.0, std::move(sys)});
    result.success_probability = prob;
    result.outcomes = {0};
    return result;
  }
  const std::uint64_t patterns = std::uint64_t{1} << plan.n_ancillas;
  for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
    QuantumState sys;
    const double prob = conditional_state(full, cc, pattern, &sys);
    if (prob <= 0.0) continue;
    result.ensemble.members.push_back({prob, std::move(sys)});
    result.outcomes.push_back(pattern);
  }
  result.success_probability = 1.0;
  check_valid(result.ensemble);
  return result;
}

CountingResult run_counting_sampled(const CountingPlan& plan,
                                    const std::vector<double>& thetas,
                                    CountingMode mode, std::uint64_t n_shots,
                                    std::uint64_t seed, int k) {
  const CountingCircuit cc = build_counting_circuit(plan, thetas, k);
  const OutcomeHistogram hist = sample_shots(cc.circuit, n_shots, seed);
  const QuantumState full = run_circuit(cc.circuit);
  CountingResult result;
  if (mode == CountingMode::PostselectAllZero) {
    const auto it = hist.weights.find(0);
    if (it == hist.weights.end()) {
      throw std::runtime_error("no shot passed the all-zero post-selection");
    }
    QuantumState sys;
    conditional_state(full, cc, 0, &sys);
    result.ensemble.members.push_back({1.0, std::move(sys)});
    result.success_probability = it->second / static_cast<double>(n_shots);
    result.outcomes = {0};
    return result;
  }
  for (const auto& [pattern, count] : hist.weights) {
    QuantumState sys;
    const double prob = conditional_state(full, cc, pattern, &sys);
    if (prob <= 0.0) continue;  // unreachable for sampled patterns
    result.ensemble.members.push_back(
        {count / static_cast<double>(n_shots), std::move(sys)});
    result.outcomes.push_back(pattern);
  }
  result.success_probability = 1.0;
  return result;
}

std::vector<SweepPoint> staged_coupling_sweep(const CountingPlan& plan,
                                              CountingMode mode,
                                              const SweepOptions& options) {
  validate_plan(plan);
  // Partial coupling is an all-to-all notion; the chain layout only changes
  // routing, not the channel, so the sweep always runs all-to-all.
  CountingPlan ata = plan;
  ata.layout = CouplingLayout::AllToAll;
  const int n = ata.n_system;
  const char* mode_name =
      mode == CountingMode::PostselectAllZero ? "postselect" : "keep-all";

  std::vector<SweepPoint> points;
  for (int k = 0; k <= n; ++k) {
    SweepPoint point;
    point.k = k;
    point.mode = mode_name;
    if (options.n_shots == 0) {
      const CountingResult run = run_counting(ata, {}, mode, k);
      const SpinObservables obs = spin_observables(run.ensemble);
      point.c2 = obs.c2;
      point.sx = obs.sx_mean;
      point.success_probability = run.success_probability;
    } else {
      const int grid = options.theta_grid_points;
      if (grid < 5) {
        throw std::invalid_argument(
            "c2 reconstruction needs at least 5 grid angles");
      }
      const std::uint64_t mask_system = (std::uint64_t{1} << n) - 1;
      double second_moment_sum = 0.0;
      std::uint64_t accepted_total = 0;
      for (int t = 0; t < grid; ++t) {
        const double theta = 2.0 * kPi * t / grid;
        const CountingCircuit cc =
            counting_measurement_circuit(ata, {}, theta, false, k);
        const OutcomeHistogram hist =
            sample_shots(cc.circuit, options.n_shots,
                         mixed_seed(options.seed,
                                    static_cast<std::uint64_t>(k) * grid + t));
        double v_sum = 0.0, v2_sum = 0.0;
        std::uint64_t accepted = 0;
        for (const auto& [key, count] : hist.weights) {
          if (mode == CountingMode::PostselectAllZero && (key >> n) != 0) {
            continue;
          }
          const int w = std::popcount(key & mask_system);
          const double v = sz_of_weight(n, w);
          v_sum += count * v;
          v2_sum += count * v * v;
          accepted += static_cast<std::uint64_t>(count);
        }
        if (accepted == 0) {
          throw std::runtime_error("no accepted shots at a grid angle");
        }
        second_moment_sum += v2_sum / static_cast<double>(accepted);
        if (t == 0) point.sx = v_sum / static_cast<double>(accepted);
        accepted_total += accepted;
      }
      point.c2 = 2.0 * second_moment_sum /
                 (grid * static_cast<double>(n) * static_cast<double>(n));
      point.success_probability =
          static_cast<double>(accepted_total) /
          (static_cast<double>(grid) * static_cast<double>(options.n_shots));
    }
    points.push_back(point);
  }
  return points;
}

std::string sweep_to_csv(const std::vector<SweepPoint>& points) {
  std::ostringstream out;
  out.precision(17);
  out << "k,C2,Sx,success_probability,mode\n";
  for (const SweepPoint& p : points) {
    out << p.k << ',' << p.c2 << ',' << p.sx << ',' << p.success_probability
        << ',' << p.mode << '\n';
  }
  return out.str();
}

}  // namespace cohsim
