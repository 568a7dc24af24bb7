// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "cohsim/observables.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cohsim/gates.hpp"
#include "cohsim/parallel.hpp"
#include "cohsim/sampling.hpp"
#include "cohsim/states.hpp"

namespace cohsim {

using nlohmann::json;

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

// Seed for the theta-column t, mixed so columns get unrelated streams.
std::uint64_t column_seed(std::uint64_t seed, std::size_t t) {
  return seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(t) + 1);
}
}  // namespace

QuantumState apply_collective_spin(const QuantumState& state, SpinAxis axis) {
  check_valid(state);
  const int n = state.n_qubits;
  QuantumState out;
  out.n_qubits = n;
  out.amplitudes.assign(state.amplitudes.size(), cplx{0.0, 0.0});
  if (axis == SpinAxis::Z) {
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
      out.amplitudes[i] =
          state.amplitudes[i] * sz_of_weight(n, std::popcount(i));
    }
    return out;
  }
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    cplx acc{0.0, 0.0};
    for (int q = 0; q < n; ++q) {
      const std::size_t j = i ^ (std::size_t{1} << q);
      if (axis == SpinAxis::X) {
        acc += state.amplitudes[j];
      } else {
        // sigma_y = [[0, -i], [i, 0]] with |0> = spin up.
        acc += ((i >> q) & 1u) ? kI * state.amplitudes[j]
                               : -kI * state.amplitudes[j];
      }
    }
    out.amplitudes[i] = 0.5 * acc;
  }
  return out;
}

SpinObservables spin_observables(const QuantumState& state) {
  return spin_observables(ensemble_from_state(state));
}

SpinObservables spin_observables(const StateEnsemble& ensemble) {
  check_valid(ensemble);
  const int n = ensemble_qubits(ensemble);
  SpinObservables obs;
  for (const StateEnsemble::Member& m : ensemble.members) {
    const QuantumState sx = apply_collective_spin(m.state, SpinAxis::X);
    const QuantumState sy = apply_collective_spin(m.state, SpinAxis::Y);
    const QuantumState sz = apply_collective_spin(m.state, SpinAxis::Z);
    obs.sx_mean += m.weight * overlap(m.state, sx).real();
    obs.sy_mean += m.weight * overlap(m.state, sy).real();
    obs.sz_mean += m.weight * overlap(m.state, sz).real();
    obs.sx2 += m.weight * norm_sq(sx);  // <S_x^2> = |S_x psi|^2
    obs.sy2 += m.weight * norm_sq(sy);
    obs.sz2 += m.weight * norm_sq(sz);
  }
  obs.c2 = (obs.sx2 + obs.sy2) / (static_cast<double>(n) * n);
  return obs;
}

double c2_from_ladder(const StateEnsemble& ensemble) {
  check_valid(ensemble);
  const int n = ensemble_qubits(ensemble);
  double total = 0.0;
  for (const StateEnsemble::Member& m : ensemble.members) {
    // S- lowers S_z (flips |0> -> |1>); S+ raises (|1> -> |0>).
    QuantumState lower, raise;
    lower.n_qubits = raise.n_qubits = n;
    lower.amplitudes.assign(m.state.amplitudes.size(), cplx{0.0, 0.0});
    raise.amplitudes.assign(m.state.amplitudes.size(), cplx{0.0, 0.0});
    for (std::size_t i = 0; i < m.state.amplitudes.size(); ++i) {
      for (int q = 0; q < n; ++q) {
        const std::size_t j = i ^ (std::size_t{1} << q);
        if ((i >> q) & 1u) {
          lower.amplitudes[i] += m.state.amplitudes[j];  // from spin up
        } else {
          raise.amplitudes[i] += m.state.amplitudes[j];  // from spin down
        }
      }
    }
    total += m.weight * (norm_sq(lower) + norm_sq(raise));
  }
  return total / (2.0 * n * n);
}

std::vector<double> uniform_theta_grid(int points) {
  if (points < 1) throw std::invalid_argument("need at least one grid point");
  std::vector<double> grid(points);
  for (int t = 0; t < points; ++t) grid[t] = 2.0 * kPi * t / points;
  return grid;
}

namespace {
// Rotates so that a Z readout of the result reports
// S_theta = cos(theta) S_x + sin(theta) S_y.
QuantumState rotate_for_s_theta(const QuantumState& state, double theta) {
  QuantumState out = state;
  const double a = -(theta + kPi / 2.0);
  const std::array<cplx, 4> mrz{std::polar(1.0, -a / 2.0), 0.0, 0.0,
                                std::polar(1.0, a / 2.0)};
  const double c = std::cos(kPi / 4.0), s = std::sin(kPi / 4.0);
  const std::array<cplx, 4> mrx{c, kI * s, kI * s, c};  // RX(-pi/2)
  for (int q = 0; q < out.n_qubits; ++q) {
    apply_1q(out, mrz, q);
    apply_1q(out, mrx, q);
  }
  return out;
}

void check_same_qubits(const StateEnsemble& ensemble) { check_valid(ensemble); }
}  // namespace

FcsDistribution fcs_s_theta(const StateEnsemble& ensemble,
                            const std::vector<double>& thetas) {
  check_same_qubits(ensemble);
  if (thetas.empty()) throw std::invalid_argument("empty theta grid");
  const int n = ensemble_qubits(ensemble);
  FcsDistribution fcs;
  fcs.n_qubits = n;
  fcs.thetas = thetas;
  fcs.values.resize(n + 1);
  for (int i = 0; i <= n; ++i) fcs.values[i] = -0.5 * n + i;
  fcs.probs.assign(thetas.size(), std::vector<double>(n + 1, 0.0));
  parallel_for(thetas.size(), [&](std::size_t t) {
    for (const StateEnsemble::Member& m : ensemble.members) {
      const QuantumState rotated = rotate_for_s_theta(m.state, thetas[t]);
      for (std::size_t i = 0; i < rotated.amplitudes.size(); ++i) {
        const int w = std::popcount(i);
        fcs.probs[t][n - w] += m.weight * std::norm(rotated.amplitudes[i]);
      }
    }
  });
  return fcs;
}

FcsDistribution fcs_s_theta_sampled(const StateEnsemble& ensemble,
                                    const std::vector<double>& thetas,
                                    std::uint64_t n_shots,
                                    std::uint64_t seed) {
  check_same_qubits(ensemble);
  if (thetas.empty()) throw std::invalid_argument("empty theta grid");
  if (n_shots == 0) throw std::invalid_argument("n_shots must be positive");
  const int n = ensemble_qubits(ensemble);
  FcsDistribution fcs;
  fcs.n_qubits = n;
  fcs.thetas = thetas;
  fcs.values.resize(n + 1);
  for (int i = 0; i <= n; ++i) fcs.values[i] = -0.5 * n + i;
  fcs.probs.assign(thetas.size(), std::vector<double>(n + 1, 0.0));

  std::vector<double> member_cdf(ensemble.members.size());
  double wrun = 0.0;
  for (std::size_t m = 0; m < ensemble.members.size(); ++m) {
    wrun += ensemble.members[m].weight;
    member_cdf[m] = wrun;
  }

  parallel_for(thetas.size(), [&](std::size_t t) {
    // Per-member cumulative outcome tables in the rotated basis.
    std::vector<std::vector<double>> cdfs(ensemble.members.size());
    for (std::size_t m = 0; m < ensemble.members.size(); ++m) {
      const QuantumState rotated =
          rotate_for_s_theta(ensemble.members[m].state, thetas[t]);
      std::vector<double>& cdf = cdfs[m];
      cdf.resize(rotated.amplitudes.size());
      double run = 0.0;
      for (std::size_t i = 0; i < rotated.amplitudes.size(); ++i) {
        run += std::norm(rotated.amplitudes[i]);
        cdf[i] = run;
      }
    }
    const std::uint64_t tseed = column_seed(seed, t);
    for (std::uint64_t shot = 0; shot < n_shots; ++shot) {
      std::mt19937_64 rng = shot_rng(tseed, shot);
      const double um = uniform01(rng) * wrun;
      const std::size_t m = static_cast<std::size_t>(
          std::lower_bound(member_cdf.begin(), member_cdf.end(), um) -
          member_cdf.begin());
      const std::vector<double>& cdf = cdfs[std::min(
          m, ensemble.members.size() - 1)];
      const double u = uniform01(rng) * cdf.back();
      const std::size_t i = static_cast<std::size_t>(
          std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
      const int w = std::popcount(std::min(i, cdf.size() - 1));
      fcs.probs[t][n - w] += 1.0;
    }
    for (double& p : fcs.probs[t]) p /= static_cast<double>(n_shots);
  });
  return fcs;
}

namespace {
void check_uniform_grid(const std::vector<double>& thetas) {
  const std::size_t m = thetas.size();
  if (m < 5) {
    throw std::invalid_argument(
        "c2_from_fcs requires a uniform grid of at least 5 angles");
  }
  const double step = 2.0 * kPi / static_cast<double>(m);
  for (std::size_t t = 0; t + 1 < m; ++t) {
    if (std::abs(thetas[t + 1] - thetas[t] - step) > 1e-9) {
      throw std::invalid_argument(
          "c2_from_fcs requires a uniform theta grid over [0, 2*pi)");
    }
  }
}
}  // namespace

double fcs_mean(const FcsDistribution& fcs, int t) {
  double total = 0.0, mean = 0.0;
  for (std::size_t i = 0; i < fcs.values.size(); ++i) {
    mean += fcs.values[i] * fcs.probs[t][i];
    total += fcs.probs[t][i];
  }
  return total > 0.0 ? mean / total : 0.0;
}

double fcs_second_moment(const FcsDistribution& fcs, int t) {
  double total = 0.0, second = 0.0;
  for (std::size_t i = 0; i < fcs.values.size(); ++i) {
    second += fcs.values[i] * fcs.values[i] * fcs.probs[t][i];
    total += fcs.probs[t][i];
  }
  return total > 0.0 ? second / total : 0.0;
}

double c2_from_fcs(const FcsDistribution& fcs) {
  check_uniform_grid(fcs.thetas);
  const double n = static_cast<double>(fcs.n_qubits);
  double acc = 0.0;
  for (std::size_t t = 0; t < fcs.thetas.size(); ++t) {
    acc += fcs_second_moment(fcs, static_cast<int>(t));
  }
  // (1/pi) * (2*pi/M) * sum <S_theta^2> / n^2
  return 2.0 * acc / (static_cast<double>(fcs.thetas.size()) * n * n);
}

SelectionRuleReport selection_rule_report(const FcsDistribution& fcs) {
  SelectionRuleReport report;
  for (double v : fcs.values) {
    if (std::abs(v - std::round(v)) > 1e-9) {
      throw std::invalid_argument(
          "parity report needs an integer outcome grid (even qubit count)");
    }
  }
  report.even_mass.resize(fcs.thetas.size(), 0.0);
  report.odd_mass.resize(fcs.thetas.size(), 0.0);
  for (std::size_t t = 0; t < fcs.thetas.size(); ++t) {
    for (std::size_t i = 0; i < fcs.values.size(); ++i) {
      const long v = std::lround(fcs.values[i]);
      if (v % 2 == 0) {
        report.even_mass[t] += fcs.probs[t][i];
      } else {
        report.odd_mass[t] += fcs.probs[t][i];
      }
    }
    report.even_total += report.even_mass[t];
    report.odd_total += report.odd_mass[t];
  }
  report.even_total /= static_cast<double>(fcs.thetas.size());
  report.odd_total /= static_cast<double>(fcs.thetas.size());
  return report;
}

std::string fcs_to_csv(const FcsDistribution& fcs) {
  std::ostringstream out;
  out.precision(17);
  out << "theta,value,prob\n";
  for (std::size_t t = 0; t < fcs.thetas.size(); ++t) {
    for (std::size_t i = 0; i < fcs.values.size(); ++i) {
      out << fcs.thetas[t] << ',' << fcs.values[i] << ','
          << fcs.probs[t][i] << '\n';
    }
  }
  return out.str();
}

std::string fcs_to_json(const FcsDistribution& fcs) {
  json j;
  j["n_qubits"] = fcs.n_qubits;
  j["thetas"] = fcs.thetas;
  j["values"] = fcs.values;
  j["probs"] = fcs.probs;
  return j.dump(2) + "\n";
}

FcsDistribution fcs_from_json(const std::string& text) {
  const json j = json::parse(text);
  FcsDistribution fcs;
  fcs.n_qubits = j.at("n_qubits").get<int>();
  fcs.thetas = j.at("thetas").get<std::vector<double>>();
  fcs.values = j.at("values").get<std::vector<double>>();
  fcs.probs = j.at("probs").get<std::vector<std::vector<double>>>();
  return fcs;
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
  if (step <= 0.0) throw std::invalid_argument("grid step must be positive");
  if (hi < lo) throw std::invalid_argument("grid bounds reversed");
  const int count = static_cast<int>(std::round((hi - lo) / step)) + 1;
  std::vector<double> grid(count);
  for (int k = 0; k < count; ++k) grid[k] = lo + k * step;
  return grid;
}

namespace {
// Transforms into the S_x (axis = X) or S_y (axis = Y) eigenbasis, applies
// the Gaussian filter centered at s, and transforms back.
QuantumState gaussian_filtered(const QuantumState& state, SpinAxis axis,
                               double sigma, double s) {
  const double r = 1.0 / std::sqrt(2.0);
  // Columns of V are the +/- eigenvectors of the axis operator.
  const std::array<cplx, 4> vx{r, r, r, -r};  // Hadamard, self-inverse
  const std::array<cplx, 4> vy{r, r, kI * r, -kI * r};
  const std::array<cplx, 4> vy_dag{r, -kI * r, r, kI * r};
  const std::array<cplx, 4>& forward = (axis == SpinAxis::X) ? vx : vy_dag;
  const std::array<cplx, 4>& back = (axis == SpinAxis::X) ? vx : vy;

  QuantumState out = state;
  for (int q = 0; q < out.n_qubits; ++q) apply_1q(out, forward, q);
  const int n = out.n_qubits;
  for (std::size_t i = 0; i < out.amplitudes.size(); ++i) {
    const double v = sz_of_weight(n, std::popcount(i)) - s;
    out.amplitudes[i] *= std::exp(-(v * v) / (sigma * sigma));
  }
  for (int q = 0; q < out.n_qubits; ++q) apply_1q(out, back, q);
  return out;
}
}  // namespace

WignerGrid wigner(const StateEnsemble& ensemble, double sigma,
                  const std::vector<double>& sx_grid,
                  const std::vector<double>& sy_grid) {
  check_valid(ensemble);
  if (sigma <= 0.0) throw std::invalid_argument("sigma must be positive");
  if (sx_grid.empty() || sy_grid.empty()) {
    throw std::invalid_argument("empty phase-space grid");
  }
  WignerGrid grid;
  grid.sigma = sigma;
  grid.sx_grid = sx_grid;
  grid.sy_grid = sy_grid;
  std::vector<std::vector<cplx>> acc(
      sx_grid.size(), std::vector<cplx>(sy_grid.size(), cplx{0.0, 0.0}));
  for (const StateEnsemble::Member& m : ensemble.members) {
    std::vector<QuantumState> gy(sy_grid.size());
    parallel_for(sy_grid.size(), [&](std::size_t iy) {
      gy[iy] = gaussian_filtered(m.state, SpinAxis::Y, sigma, sy_grid[iy]);
    });
    parallel_for(sx_grid.size(), [&](std::size_t ix) {
      const QuantumState gx =
          gaussian_filtered(m.state, SpinAxis::X, sigma, sx_grid[ix]);
      for (std::size_t iy = 0; iy < sy_grid.size(); ++iy) {
        acc[ix][iy] += m.weight * overlap(gx, gy[iy]);
      }
    });
  }
  grid.values.assign(sx_grid.size(),
                     std::vector<double>(sy_grid.size(), 0.0));
  for (std::size_t ix = 0; ix < sx_grid.size(); ++ix) {
    for (std::size_t iy = 0; iy < sy_grid.size(); ++iy) {
      grid.values[ix][iy] = std::abs(acc[ix][iy]);
    }
  }
  return grid;
}

double wigner_point(const StateEnsemble& ensemble, double sigma, double sx,
                    double sy) {
  const WignerGrid grid = wigner(ensemble, sigma, {sx}, {sy});
  return grid.values[0][0];
}

std::string wigner_to_csv(const WignerGrid& grid) {
  std::ostringstream out;
  out.precision(17);
  out << "sx\\sy";
  for (double sy : grid.sy_grid) out << ',' << sy;
  out << '\n';
  for (std::size_t ix = 0; ix < grid.sx_grid.size(); ++ix) {
    out << grid.sx_grid[ix];
    for (double v : grid.values[ix]) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace cohsim
