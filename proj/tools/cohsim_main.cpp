// Copyright 2026 The cohsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// cohsim: simulate equator-prepared qubit registers, the ancilla-based
// particle-number counting protocol, and the planar-coherence observables
// read out from them, on an ideal or readout-noisy simulator.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohsim/angles.hpp"
#include "cohsim/circuit.hpp"
#include "cohsim/counting.hpp"
#include "cohsim/ensemble.hpp"
#include "cohsim/mitigation.hpp"
#include "cohsim/nativegates.hpp"
#include "cohsim/observables.hpp"
#include "cohsim/sampling.hpp"
#include "cohsim/states.hpp"

namespace {

constexpr const char* kVersion = "cohsim 1.0.0";

using nlohmann::json;

// ---------------------------------------------------------------------------
// Formatting and output helpers.

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) throw std::runtime_error("cannot open --out file: " + path);
  out << content;
  if (!out.good()) throw std::runtime_error("failed writing --out file: " + path);
}

// Self-describing header: tool version plus the resolved parameters, rendered
// deterministically (sorted keys, no timestamps) so reruns are byte-identical.
json meta_block(const std::string& command, const json& params) {
  return json{{"tool", kVersion}, {"command", command}, {"params", params}};
}

std::string csv_header(const std::string& command, const json& params) {
  std::ostringstream out;
  out << "# " << kVersion << "\n# command: " << command << '\n';
  for (const auto& [key, value] : params.items()) {
    out << "# " << key << ": " << value.dump() << '\n';
  }
  return out.str();
}

// Injects a "meta" key into a serialized JSON object.
std::string with_meta(const std::string& payload, const json& meta) {
  json j = json::parse(payload);
  j["meta"] = meta;
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---------------------------------------------------------------------------
// Shared option bundles.

struct StateOptions {
  std::string state = "coherent";
  int n = 0;
  std::vector<std::string> thetas;  // angle expressions; 1 value = uniform
  std::string sector = "0";        // projected only
  int samples = 0;                  // noisy only; 0 = exhaustive
  std::uint64_t seed = 0;
};

std::vector<double> resolve_thetas(const StateOptions& opt) {
  std::vector<double> parsed;
  for (const std::string& expr : opt.thetas) parsed.push_back(cohsim::parse_angle(expr));
  if (parsed.empty()) return std::vector<double>(opt.n, 0.0);
  if (parsed.size() == 1) return std::vector<double>(opt.n, parsed[0]);
  if (parsed.size() != static_cast<std::size_t>(opt.n)) {
    throw std::invalid_argument("--theta needs 1 value or one per qubit");
  }
  return parsed;
}

cohsim::StateEnsemble build_state(const StateOptions& opt) {
  const std::vector<double> thetas = resolve_thetas(opt);
  if (opt.state == "coherent") {
    return cohsim::ensemble_from_state(cohsim::prepare_coherent(opt.n, thetas));
  }
  if (opt.state == "projected") {
    const double s = cohsim::parse_angle(opt.sector);  // plain number parse
    return cohsim::ensemble_from_state(
        cohsim::project_sz(cohsim::prepare_coherent(opt.n, thetas), s));
  }
  if (opt.state == "dephased") {
    return cohsim::dephase_sz(cohsim::prepare_coherent(opt.n, thetas));
  }
  if (opt.state == "noisy") {
    return opt.samples > 0 ? cohsim::prepare_noisy(opt.n, opt.samples, opt.seed)
                           : cohsim::prepare_noisy(opt.n);
  }
  throw std::invalid_argument("unknown --state: " + opt.state);
}

json state_params(const StateOptions& opt) {
  json p{{"state", opt.state}, {"n", opt.n}};
  if (!opt.thetas.empty()) p["theta"] = opt.thetas;
  if (opt.state == "projected") p["sector"] = opt.sector;
  if (opt.state == "noisy" && opt.samples > 0) {
    p["samples"] = opt.samples;
    p["seed"] = opt.seed;
  }
  return p;
}

void add_state_options(CLI::App* cmd, StateOptions* opt) {
  cmd->add_option("--state", opt->state, "State family")
      ->check(CLI::IsMember({"coherent", "projected", "dephased", "noisy"}))
      ->capture_default_str();
  cmd->add_option("--n", opt->n, "Number of system qubits")->required();
  cmd->add_option("--theta", opt->thetas,
                  "Equator phase(s); angle expressions like pi/2 "
                  "(one value = uniform, or one per qubit)");
  cmd->add_option("--sector", opt->sector,
                  "Collective-spin sector for --state projected")
      ->capture_default_str();
  cmd->add_option("--samples", opt->samples,
                  "Monte Carlo members for --state noisy (0 = exhaustive)");
  cmd->add_option("--seed", opt->seed, "RNG seed")->capture_default_str();
}

// Counting-plan options shared by sweep/compile/observe --counted.
struct PlanOptions {
  int na = -1;               // -1 = floor(log2 n)
  std::string phi = "pi";    // base coupling phase; ancilla a gets phi / 2^a
};

cohsim::CountingPlan resolve_plan(int n, const PlanOptions& opt,
                                  cohsim::CouplingLayout layout) {
  cohsim::CountingPlan plan = cohsim::default_plan(n, layout);
  if (opt.na > 0) plan.n_ancillas = opt.na;
  const double base = cohsim::parse_angle(opt.phi);
  plan.phis.assign(plan.n_ancillas, 0.0);
  for (int a = 0; a < plan.n_ancillas; ++a) {
    plan.phis[a] = base / std::pow(2.0, a);
  }
  return plan;
}

void add_plan_options(CLI::App* cmd, PlanOptions* opt) {
  cmd->add_option("--na", opt->na,
                  "Number of counting ancillas (default floor(log2 n))");
  cmd->add_option("--phi", opt->phi,
                  "Base coupling phase; ancilla a couples at phi / 2^a")
      ->capture_default_str();
}

// ---------------------------------------------------------------------------
// Subcommand implementations.

int run_prepare(const StateOptions& sopt, const std::string& out_path) {
  const cohsim::StateEnsemble ensemble = build_state(sopt);
  std::cout << "state = " << sopt.state << "\nn = " << sopt.n
            << "\nn_members = " << ensemble.members.size() << '\n';
  const std::string payload =
      with_meta(cohsim::ensemble_to_json(ensemble),
                meta_block("prepare", state_params(sopt)));
  if (!out_path.empty()) {
    write_file(out_path, payload);
  } else {
    std::cout << payload;
  }
  return 0;
}

int run_observe(const StateOptions& sopt, bool counted, const PlanOptions& popt,
                bool keep_all) {
  cohsim::StateEnsemble ensemble;
  double success = 1.0;
  if (counted) {
    if (sopt.state != "coherent") {
      throw std::invalid_argument("--counted starts from --state coherent");
    }
    const cohsim::CountingPlan plan =
        resolve_plan(sopt.n, popt, cohsim::CouplingLayout::AllToAll);
    const cohsim::CountingResult result = cohsim::run_counting(
        plan, resolve_thetas(sopt),
        keep_all ? cohsim::CountingMode::KeepAllOutcomes
                 : cohsim::CountingMode::PostselectAllZero);
    ensemble = result.ensemble;
    success = result.success_probability;
  } else {
    ensemble = build_state(sopt);
  }
  const cohsim::SpinObservables obs = cohsim::spin_observables(ensemble);
  std::cout << "state = " << sopt.state << (counted ? " (counted)" : "")
            << "\nn = " << sopt.n << '\n';
  if (counted) std::cout << "success_probability = " << num(success) << '\n';
  std::cout << "sx = " << num(obs.sx_mean) << "\nsy = " << num(obs.sy_mean)
            << "\nsz = " << num(obs.sz_mean) << "\nsx2 = " << num(obs.sx2)
            << "\nsy2 = " << num(obs.sy2) << "\nsz2 = " << num(obs.sz2)
            << "\nc2 = " << num(obs.c2) << '\n';
  return 0;
}

int run_fcs(const StateOptions& sopt, int grid_points, std::uint64_t shots,
            const std::string& out_path, const std::string& format) {
  const cohsim::StateEnsemble ensemble = build_state(sopt);
  const std::vector<double> grid = cohsim::uniform_theta_grid(grid_points);
  const cohsim::FcsDistribution fcs =
      shots == 0 ? cohsim::fcs_s_theta(ensemble, grid)
                 : cohsim::fcs_s_theta_sampled(ensemble, grid, shots, sopt.seed);
  std::cout << "state = " << sopt.state << "\nn = " << sopt.n
            << "\ngrid_points = " << grid_points << "\nmode = "
            << (shots == 0 ? "exact" : "shots") << '\n';
  if (grid_points >= 5) {
    std::cout << "c2_from_fcs = " << num(cohsim::c2_from_fcs(fcs)) << '\n';
  }
  json params = state_params(sopt);
  params["grid_points"] = grid_points;
  params["shots"] = shots;
  const json meta = meta_block("fcs", params);
  std::string payload;
  if (format == "json") {
    payload = with_meta(cohsim::fcs_to_json(fcs), meta);
  } else {
    payload = csv_header("fcs", params) + cohsim::fcs_to_csv(fcs);
  }
  if (!out_path.empty()) write_file(out_path, payload);
  return 0;
}

int run_wigner(const StateOptions& sopt, double sigma, double grid_min,
               double grid_max, double grid_step, const std::string& out_path,
               const std::string& format) {
  const cohsim::StateEnsemble ensemble = build_state(sopt);
  const double lo = std::isnan(grid_min) ? -(sopt.n / 2.0 + 1.0) : grid_min;
  const double hi = std::isnan(grid_max) ? +(sopt.n / 2.0 + 1.0) : grid_max;
  const auto axis = cohsim::uniform_grid(lo, hi, grid_step);
  const cohsim::WignerGrid grid = cohsim::wigner(ensemble, sigma, axis, axis);

  double best = -1.0, best_x = 0.0, best_y = 0.0;
  for (std::size_t ix = 0; ix < grid.sx_grid.size(); ++ix) {
    for (std::size_t iy = 0; iy < grid.sy_grid.size(); ++iy) {
      if (grid.values[ix][iy] > best) {
        best = grid.values[ix][iy];
        best_x = grid.sx_grid[ix];
        best_y = grid.sy_grid[iy];
      }
    }
  }
  std::cout << "state = " << sopt.state << "\nn = " << sopt.n
            << "\nsigma = " << num(sigma) << "\ngrid = [" << num(lo) << ", "
            << num(hi) << "] step " << num(grid_step) << '\n'
            << "max = " << num(best) << " at (" << num(best_x) << ", "
            << num(best_y) << ")\n";

  json params = state_params(sopt);
  params["sigma"] = sigma;
  params["grid_min"] = lo;
  params["grid_max"] = hi;
  params["grid_step"] = grid_step;
  std::string payload;
  if (format == "json") {
    json j{{"sigma", grid.sigma},
           {"sx_grid", grid.sx_grid},
           {"sy_grid", grid.sy_grid},
           {"values", grid.values},
           {"meta", meta_block("wigner", params)}};
    payload = j.dump(2) + "\n";
  } else {
    payload = csv_header("wigner", params) + cohsim::wigner_to_csv(grid);
  }
  if (!out_path.empty()) write_file(out_path, payload);
  return 0;
}

int run_sweep(int n, const PlanOptions& popt, bool keep_all, bool exact,
              std::uint64_t shots, std::uint64_t seed, int grid_points,
              const std::string& noise_path, bool mitigate,
              const std::string& mitigate_order, const std::string& out_path,
              const std::string& format) {
  const cohsim::CountingPlan plan =
      resolve_plan(n, popt, cohsim::CouplingLayout::AllToAll);
  const cohsim::CountingMode mode = keep_all
                                        ? cohsim::CountingMode::KeepAllOutcomes
                                        : cohsim::CountingMode::PostselectAllZero;
  if (exact && shots > 0) {
    throw std::invalid_argument("--exact and --shots are mutually exclusive");
  }
  if (!exact && shots == 0) exact = true;  // default mode

  std::vector<cohsim::SweepPoint> points;
  if (!noise_path.empty()) {
    if (exact) {
      throw std::invalid_argument("--noise needs shot mode (--shots)");
    }
    if (keep_all) {
      throw std::invalid_argument(
          "noise injection supports the post-selected mode only");
    }
    const cohsim::ConfusionModel model =
        cohsim::confusion_from_json(read_text_file(noise_path));
    cohsim::NoisySweepOptions opt;
    opt.n_shots = shots;
    opt.seed = seed;
    opt.theta_grid_points = grid_points;
    opt.mitigate = mitigate;
    opt.mitigate_before_postselect = mitigate_order == "before";
    points = cohsim::noisy_staged_sweep(plan, model, opt);
  } else {
    if (mitigate) {
      throw std::invalid_argument("--mitigate needs a --noise model");
    }
    cohsim::SweepOptions opt;
    opt.n_shots = exact ? 0 : shots;
    opt.seed = seed;
    opt.theta_grid_points = grid_points;
    points = cohsim::staged_coupling_sweep(plan, mode, opt);
  }

  std::cout << "n = " << n << "\nna = " << plan.n_ancillas
            << "\nphi = " << cohsim::format_angle(plan.phis[0])
            << "\nmode = " << points.front().mode << '\n'
            << "k C2 Sx success_probability\n";
  for (const auto& p : points) {
    std::cout << p.k << ' ' << num(p.c2) << ' ' << num(p.sx) << ' '
              << num(p.success_probability) << '\n';
  }

  json params{{"n", n},
              {"na", plan.n_ancillas},
              {"phi", popt.phi},
              {"mode", points.front().mode},
              {"grid_points", grid_points}};
  if (!exact) {
    params["shots"] = shots;
    params["seed"] = seed;
  }
  if (!noise_path.empty()) {
    params["mitigate"] = mitigate;
    if (mitigate) params["mitigate_order"] = mitigate_order;
  }
  std::string payload;
  if (format == "json") {
    json rows = json::array();
    for (const auto& p : points) {
      rows.push_back({{"k", p.k},
                      {"C2", p.c2},
                      {"Sx", p.sx},
                      {"success_probability", p.success_probability},
                      {"mode", p.mode}});
    }
    payload = json{{"points", rows}, {"meta", meta_block("sweep", params)}}.dump(2) + "\n";
  } else {
    payload = csv_header("sweep", params) + cohsim::sweep_to_csv(points);
  }
  if (!out_path.empty()) write_file(out_path, payload);
  return 0;
}

int run_compile(int n, const PlanOptions& popt,
                const std::vector<std::string>& theta_exprs, bool no_probe,
                const std::string& out_path) {
  const cohsim::CountingPlan plan =
      resolve_plan(n, popt, cohsim::CouplingLayout::LinearChain);
  cohsim::CompileOptions opt;
  opt.probe_stage = !no_probe;
  StateOptions tmp;
  tmp.n = n;
  tmp.thetas = theta_exprs;
  opt.thetas = resolve_thetas(tmp);
  if (std::all_of(opt.thetas.begin(), opt.thetas.end(),
                  [](double t) { return t == 0.0; })) {
    opt.thetas.clear();
  }
  const cohsim::CompiledCounting compiled = cohsim::compile_counting(plan, opt);
  const std::string program = cohsim::export_program(compiled);

  std::cout << program;
  std::cout << "two_qubit_gates = " << compiled.two_qubit_gate_count << '\n';
  for (const auto& [wire, angle] : compiled.correction.rz) {
    std::cout << "correction_rz[" << wire
              << "] = " << cohsim::format_angle(angle) << '\n';
  }
  std::cout << "correction_global_phase = "
            << cohsim::format_angle(compiled.correction.global_phase) << '\n';
  if (!out_path.empty()) write_file(out_path, program);
  return 0;
}

int run_calibrate(int n, double p00, double p11, const std::string& truth_path,
                  std::uint64_t shots, std::uint64_t seed,
                  const std::string& out_path) {
  cohsim::SimulatedReadoutDevice device;
  if (!truth_path.empty()) {
    device.truth = cohsim::confusion_from_json(read_text_file(truth_path));
  } else {
    if (n <= 0) throw std::invalid_argument("--n is required without --truth");
    device.truth = cohsim::uniform_confusion(n, p00, p11);
  }
  const cohsim::ConfusionModel est = cohsim::calibrate(device, shots, seed);
  for (int q = 0; q < cohsim::model_qubits(est); ++q) {
    std::cout << "p00[" << q << "] = " << num(est.p00[q]) << "  p11[" << q
              << "] = " << num(est.p11[q]) << '\n';
  }
  json params{{"shots", shots}, {"seed", seed}};
  const std::string payload = with_meta(cohsim::confusion_to_json(est),
                                        meta_block("calibrate", params));
  if (!out_path.empty()) {
    write_file(out_path, payload);
  } else {
    std::cout << payload;
  }
  return 0;
}

int run_mitigate(const std::string& hist_path, const std::string& noise_path,
                 const std::string& out_path) {
  const cohsim::OutcomeHistogram hist =
      cohsim::histogram_from_json(read_text_file(hist_path));
  const cohsim::ConfusionModel model =
      cohsim::confusion_from_json(read_text_file(noise_path));
  const cohsim::OutcomeHistogram fixed = cohsim::mitigate(hist, model);
  std::cout << "total_in = " << num(cohsim::histogram_total(hist))
            << "\ntotal_out = " << num(cohsim::histogram_total(fixed)) << '\n';
  json params{{"histogram", hist_path}, {"noise", noise_path}};
  const std::string payload = with_meta(cohsim::histogram_to_json(fixed),
                                        meta_block("mitigate", params));
  if (!out_path.empty()) {
    write_file(out_path, payload);
  } else {
    std::cout << payload;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cohsim: long-range-coherence protocol simulator.\n"
      "Prepares equator states (coherent / projected / dephased / noisy),\n"
      "runs the ancilla counting protocol (abstract or compiled to the\n"
      "RX/RZ/CPHASE/XY native set on a linear chain), and measures the\n"
      "planar-coherence observables, exactly or shot-sampled, with optional\n"
      "readout-noise injection and mitigation.  Angles accept expressions\n"
      "like pi/2, -3*pi/4, or plain radians.  Set COHSIM_THREADS to bound\n"
      "worker threads."};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "Read options from a config file (TOML/INI)");

  // prepare -----------------------------------------------------------------
  auto* prepare = app.add_subcommand("prepare", "Build a state and write it as JSON");
  StateOptions prep_state;
  std::string prep_out;
  add_state_options(prepare, &prep_state);
  prepare->add_option("--out", prep_out, "Output file (default: stdout)");

  // observe -----------------------------------------------------------------
  auto* observe = app.add_subcommand(
      "observe", "Collective spin moments and the coherence figure c2");
  StateOptions obs_state;
  PlanOptions obs_plan;
  bool obs_counted = false, obs_keep_all = false;
  add_state_options(observe, &obs_state);
  add_plan_options(observe, &obs_plan);
  auto* obs_counted_flag = observe->add_flag(
      "--counted", obs_counted,
      "Run the counting protocol (post-selected) before observing");
  observe
      ->add_flag("--keep-all", obs_keep_all,
                 "With --counted: keep every ancilla outcome branch")
      ->needs(obs_counted_flag);

  // fcs ---------------------------------------------------------------------
  auto* fcs = app.add_subcommand(
      "fcs", "Full counting statistics of the rotated collective spin");
  StateOptions fcs_state;
  int fcs_grid = 64;
  std::uint64_t fcs_shots = 0;
  std::string fcs_out, fcs_format = "csv";
  add_state_options(fcs, &fcs_state);
  fcs->add_option("--grid-points", fcs_grid, "Probe angles over [0, 2pi)")
      ->capture_default_str();
  fcs->add_option("--shots", fcs_shots, "Shots per angle (0 = exact)")
      ->capture_default_str();
  fcs->add_option("--out", fcs_out, "Output file");
  fcs->add_option("--format", fcs_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // wigner --------------------------------------------------------------------
  auto* wig = app.add_subcommand(
      "wigner", "Planar phase-space quasi-distribution on a square grid");
  StateOptions wig_state;
  double wig_sigma = 0.2;
  double wig_min = std::nan(""), wig_max = std::nan(""), wig_step = 0.25;
  std::string wig_out, wig_format = "csv";
  add_state_options(wig, &wig_state);
  wig->add_option("--sigma", wig_sigma, "Gaussian filter width")->capture_default_str();
  wig->add_option("--grid-min", wig_min, "Grid start (default -(n/2 + 1))");
  wig->add_option("--grid-max", wig_max, "Grid end (default n/2 + 1)");
  wig->add_option("--grid-step", wig_step, "Grid step")->capture_default_str();
  wig->add_option("--out", wig_out, "Output file");
  wig->add_option("--format", wig_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // sweep ---------------------------------------------------------------------
  auto* sweep = app.add_subcommand(
      "sweep", "Couple k = 0..n qubits and track c2, Sx, and acceptance");
  int sweep_n = 0;
  PlanOptions sweep_plan;
  bool sweep_postselect = false, sweep_keep_all = false, sweep_exact = false;
  bool sweep_mitigate = false;
  std::uint64_t sweep_shots = 0, sweep_seed = 0;
  int sweep_grid = 64;
  std::string sweep_noise, sweep_order = "before", sweep_out, sweep_format = "csv";
  sweep->add_option("--n", sweep_n, "Number of system qubits")->required();
  add_plan_options(sweep, &sweep_plan);
  auto* sweep_ps_flag = sweep->add_flag(
      "--postselect", sweep_postselect, "Keep the all-zero ancilla pattern (default)");
  sweep->add_flag("--keep-all", sweep_keep_all, "Keep every outcome branch")
      ->excludes(sweep_ps_flag);
  auto* sweep_exact_flag =
      sweep->add_flag("--exact", sweep_exact, "Exact expectation values (default)");
  sweep->add_option("--shots", sweep_shots, "Shots per probe angle")
      ->excludes(sweep_exact_flag);
  sweep->add_option("--seed", sweep_seed, "RNG seed")->capture_default_str();
  sweep->add_option("--grid-points", sweep_grid, "Probe angles for the c2 average")
      ->capture_default_str();
  sweep->add_option("--noise", sweep_noise,
                    "Confusion-model JSON covering system + ancilla bits");
  sweep->add_flag("--mitigate", sweep_mitigate, "Invert the confusion model");
  sweep->add_option("--mitigate-order", sweep_order,
                    "Mitigate before or after the ancilla post-selection")
      ->check(CLI::IsMember({"before", "after"}))
      ->capture_default_str();
  sweep->add_option("--out", sweep_out, "Output file");
  sweep->add_option("--format", sweep_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // compile -------------------------------------------------------------------
  auto* compile = app.add_subcommand(
      "compile", "Lower the counting circuit to the native set on a chain");
  int compile_n = 0;
  PlanOptions compile_plan;
  std::vector<std::string> compile_thetas;
  bool compile_no_probe = false;
  std::string compile_out;
  compile->add_option("--n", compile_n, "Number of system qubits")->required();
  add_plan_options(compile, &compile_plan);
  compile->add_option("--theta", compile_thetas,
                      "Preparation phase(s) (angle expressions)");
  compile->add_flag("--no-probe", compile_no_probe,
                    "Omit the probe rotation and measurement trailer");
  compile->add_option("--out", compile_out, "Write the program text to a file");

  // calibrate -----------------------------------------------------------------
  auto* cal = app.add_subcommand(
      "calibrate", "Estimate a readout confusion model from alternating patterns");
  int cal_n = 0;
  double cal_p00 = 1.0, cal_p11 = 1.0;
  std::string cal_truth, cal_out;
  std::uint64_t cal_shots = 100000, cal_seed = 0;
  cal->add_option("--n", cal_n, "Qubit count for a uniform device truth");
  cal->add_option("--p00", cal_p00, "Device-truth P(read 0 | 0)")->capture_default_str();
  cal->add_option("--p11", cal_p11, "Device-truth P(read 1 | 1)")->capture_default_str();
  cal->add_option("--truth", cal_truth, "Device-truth confusion JSON file");
  cal->add_option("--shots", cal_shots, "Shots per calibration pattern")
      ->capture_default_str();
  cal->add_option("--seed", cal_seed, "RNG seed")->capture_default_str();
  cal->add_option("--out", cal_out, "Output file (default: stdout)");

  // mitigate ------------------------------------------------------------------
  auto* mit = app.add_subcommand(
      "mitigate", "Invert a confusion model on a stored histogram");
  std::string mit_hist, mit_noise, mit_out;
  mit->add_option("--histogram", mit_hist, "Histogram JSON file")->required();
  mit->add_option("--noise", mit_noise, "Confusion-model JSON file")->required();
  mit->add_option("--out", mit_out, "Output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*prepare) return run_prepare(prep_state, prep_out);
    if (*observe) return run_observe(obs_state, obs_counted, obs_plan, obs_keep_all);
    if (*fcs) return run_fcs(fcs_state, fcs_grid, fcs_shots, fcs_out, fcs_format);
    if (*wig) {
      return run_wigner(wig_state, wig_sigma, wig_min, wig_max, wig_step,
                        wig_out, wig_format);
    }
    if (*sweep) {
      return run_sweep(sweep_n, sweep_plan, sweep_keep_all, sweep_exact,
                       sweep_shots, sweep_seed, sweep_grid, sweep_noise,
                       sweep_mitigate, sweep_order, sweep_out, sweep_format);
    }
    if (*compile) {
      return run_compile(compile_n, compile_plan, compile_thetas,
                         compile_no_probe, compile_out);
    }
    if (*cal) {
      return run_calibrate(cal_n, cal_p00, cal_p11, cal_truth, cal_shots,
                           cal_seed, cal_out);
    }
    if (*mit) return run_mitigate(mit_hist, mit_noise, mit_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  std::cerr << "error: no subcommand selected\n";
  return 1;
}
