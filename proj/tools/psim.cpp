// psim: projective-simulation experiment runner.
//
// Subcommands:
//   run      one ensemble experiment -> curve.csv (+ manifest)
//   sweep    one experiment per eta  -> sweep.csv (+ manifest)
//   physics  mountain-car analysis: height profile, reach bounds,
//            feasibility verdict and the two-phase baseline run
//
// Exit codes: 0 success, 2 configuration error, 3 runtime error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ps/csv.hpp"
#include "ps/harness.hpp"
#include "ps/mc_physics.hpp"
#include "ps/version.hpp"

namespace {

namespace fs = std::filesystem;

struct RunFlags {
  std::string env;
  std::string policy = "basic";
  double eta = 0.0;
  double gamma = 0.0;
  double alpha = 1.0;
  double lambda = 1.0;
  int agents = 1000;
  int trials = 100;
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 1'000'000;
  int grid_percepts = 20;
  std::string dynamics = "printed";
  bool carry_glow = false;
  int threads = 0;
  std::string maze;
  std::string out_dir = ".";
};

ps::EnvKind parse_env(const std::string& name) {
  if (name == "gridworld") return ps::EnvKind::GridWorld;
  if (name == "mc-random") return ps::EnvKind::MountainCarRandom;
  if (name == "mc-fixed") return ps::EnvKind::MountainCarFixed;
  throw std::invalid_argument("unknown --env value: " + name);
}

ps::Policy parse_policy(const std::string& name) {
  if (name == "basic") return ps::Policy::Basic;
  if (name == "softmax") return ps::Policy::Softmax;
  throw std::invalid_argument("unknown --policy value: " + name);
}

ps::DynamicsOrder parse_dynamics(const std::string& name) {
  if (name == "printed") return ps::DynamicsOrder::AsPrinted;
  if (name == "conventional") return ps::DynamicsOrder::Conventional;
  throw std::invalid_argument("unknown --dynamics value: " + name);
}

ps::ExperimentConfig to_config(const RunFlags& f) {
  ps::ExperimentConfig cfg;
  cfg.env = parse_env(f.env);
  cfg.agents = f.agents;
  cfg.trials = f.trials;
  cfg.params = ps::PSParams(f.lambda, f.gamma, f.eta, f.alpha,
                            parse_policy(f.policy));
  cfg.seed = f.seed;
  cfg.max_steps_per_trial = f.max_steps;
  cfg.glow_reset_between_trials = !f.carry_glow;
  cfg.dynamics_order = parse_dynamics(f.dynamics);
  cfg.mc_bins = f.grid_percepts;
  cfg.threads = f.threads;
  cfg.maze_file = f.maze;
  cfg.validate();
  return cfg;
}

void add_experiment_options(CLI::App& cmd, RunFlags& f) {
  cmd.add_option("--env", f.env, "environment: gridworld|mc-random|mc-fixed")
      ->required();
  cmd.add_option("--policy", f.policy, "transition probabilities: basic|softmax");
  cmd.add_option("--eta", f.eta, "glow decay rate in [0,1]")->required();
  cmd.add_option("--gamma", f.gamma, "damping parameter in [0,1]");
  cmd.add_option("--alpha", f.alpha, "softmax exponent scale");
  cmd.add_option("--lambda", f.lambda, "reward magnitude");
  cmd.add_option("--agents", f.agents, "ensemble size");
  cmd.add_option("--trials", f.trials, "trials per agent");
  cmd.add_option("--seed", f.seed, "master random seed");
  cmd.add_option("--max-steps", f.max_steps, "safety cap per trial");
  cmd.add_option("--grid-percepts", f.grid_percepts,
                 "mountain-car bins per axis");
  cmd.add_option("--dynamics", f.dynamics,
                 "mountain-car update order: printed|conventional");
  cmd.add_flag("--carry-glow", f.carry_glow,
               "keep glow across trials instead of resetting it");
  cmd.add_option("--threads", f.threads, "worker threads (0 = all cores)");
  cmd.add_option("--maze", f.maze, "maze layout file (gridworld)");
  cmd.add_option("--out", f.out_dir, "output directory");
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

void write_manifest(const fs::path& dir, const ps::RunManifest& manifest) {
  fs::path p = dir / manifest.artifact;
  p.replace_extension(".manifest.json");
  write_file(p, ps::manifest_json(manifest));
}

int cmd_run(const RunFlags& flags) {
  const ps::ExperimentConfig cfg = to_config(flags);
  const fs::path dir(flags.out_dir);
  fs::create_directories(dir);

  const auto t0 = std::chrono::steady_clock::now();
  const ps::ExperimentResult result = ps::run_experiment(cfg);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  std::ostringstream csv;
  ps::write_curve_csv(csv, result.curve);
  write_file(dir / "curve.csv", csv.str());
  write_manifest(dir, {cfg, ps::kVersion, secs, result.capped_trials,
                       "curve.csv"});

  const Eigen::Index last = result.curve.mean_steps.size() - 1;
  std::cout << "env=" << ps::to_string(cfg.env)
            << " policy=" << ps::to_string(cfg.params.policy)
            << " eta=" << ps::format_double(cfg.params.eta_glow)
            << " agents=" << cfg.agents << " trials=" << cfg.trials << "\n"
            << "first-trial mean: "
            << ps::format_double(result.curve.mean_steps[0]) << "\n"
            << "final-trial mean: "
            << ps::format_double(result.curve.mean_steps[last]) << " (sigma "
            << ps::format_double(result.curve.std_steps[last]) << ")\n"
            << "capped trials: " << result.capped_trials << "\n"
            << "wrote " << (dir / "curve.csv").string() << " in "
            << ps::format_double(secs) << " s\n";
  return 0;
}

int cmd_sweep(const RunFlags& flags, std::vector<double> etas,
              int probe_trial) {
  ps::ExperimentConfig cfg = to_config(flags);
  if (etas.empty())
    throw std::invalid_argument("sweep: --etas must not be empty");
  if (probe_trial != -1 && (probe_trial < 1 || probe_trial > cfg.trials))
    throw std::invalid_argument("sweep: --probe-trial must be in 1..trials");
  const int probe_index = probe_trial == -1 ? cfg.trials - 1 : probe_trial - 1;

  const fs::path dir(flags.out_dir);
  fs::create_directories(dir);

  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = ps::eta_sweep(cfg, etas, probe_index);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  std::ostringstream csv;
  ps::write_sweep_csv(csv, rows);
  write_file(dir / "sweep.csv", csv.str());
  write_manifest(dir, {cfg, ps::kVersion, secs, 0, "sweep.csv"});

  const auto best = std::min_element(
      rows.begin(), rows.end(),
      [](const auto& a, const auto& b) { return a.mean_steps < b.mean_steps; });
  std::cout << "eta,mean_steps_at_trial_" << (probe_index + 1) << "\n";
  for (const auto& row : rows)
    std::cout << ps::format_double(row.eta) << ","
              << ps::format_double(row.mean_steps) << "\n";
  std::cout << "best eta: " << ps::format_double(best->eta) << " ("
            << ps::format_double(best->mean_steps) << " steps)\n"
            << "wrote " << (dir / "sweep.csv").string() << "\n";
  return 0;
}

int cmd_physics(double g_accel, double a_engine, double offset, double x0,
                const std::string& dynamics, double dx,
                const std::string& out_dir, const std::string& trace_file) {
  ps::PhysicsParams params{g_accel, a_engine, offset};
  params.validate();
  const ps::DynamicsOrder order = parse_dynamics(dynamics);

  const fs::path dir(out_dir);
  fs::create_directories(dir);

  std::ostringstream csv;
  ps::write_height_profile_csv(csv, params, ps::kMcMinX, ps::kMcGoalX, dx);
  write_file(dir / "height_profile.csv", csv.str());

  const double bottom = ps::hill_bottom(params);
  const double reach_r = ps::max_reach(x0, ps::PushDirection::Right, params);
  const double reach_l = ps::max_reach(x0, ps::PushDirection::Left, params);
  const bool direct = ps::feasibility_check(x0, ps::kMcGoalX, params);

  std::cout << "hill bottom: x = " << ps::format_double(bottom) << "\n"
            << "max reach from x0=" << ps::format_double(x0)
            << " pushing right: " << ps::format_double(reach_r) << "\n"
            << "max reach from x0=" << ps::format_double(x0)
            << " pushing left: " << ps::format_double(reach_l) << "\n"
            << "direct push " << ps::format_double(x0) << " -> "
            << ps::format_double(ps::kMcGoalX) << ": "
            << (direct ? "feasible" : "infeasible") << "\n";

  std::vector<ps::McTrajectoryPoint> trace;
  const auto step_fn = [order](const ps::MountainCarState& s, ps::MCAction a) {
    return ps::mc_step(s, a, order);
  };
  const ps::BaselineRun run = ps::baseline_strategy(
      step_fn, {x0, 0.0}, 10000, trace_file.empty() ? nullptr : &trace);
  std::cout << "baseline strategy (" << dynamics << "): " << run.total_steps
            << " steps (" << run.reverse_steps << " reverse, "
            << run.forward_steps << " forward), min x = "
            << ps::format_double(run.min_x) << ", max |v| = "
            << ps::format_double(run.max_abs_v) << "\n"
            << "wrote " << (dir / "height_profile.csv").string() << "\n";

  if (!trace_file.empty()) {
    std::ostringstream tcsv;
    ps::write_trajectory_csv(tcsv, trace);
    write_file(dir / trace_file, tcsv.str());
    std::cout << "wrote " << (dir / trace_file).string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"projective-simulation experiment runner"};
  app.set_version_flag("--version", ps::kVersion);
  app.set_config("--config");
  app.require_subcommand(1);

  RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "run one ensemble experiment");
  add_experiment_options(*run, run_flags);

  RunFlags sweep_flags;
  std::vector<double> etas;
  int probe_trial = -1;
  CLI::App* sweep = app.add_subcommand("sweep", "run one experiment per eta");
  add_experiment_options(*sweep, sweep_flags);
  sweep->get_option("--eta")->required(false);
  sweep->add_option("--etas", etas, "eta values to sweep")->delimiter(',');
  sweep->add_option("--probe-trial", probe_trial,
                    "1-based trial to report (default: last)");

  double g_accel = 0.0025, a_engine = 0.001, offset = 0.0, x0 = -0.5,
         dx = 0.005;
  std::string dynamics = "printed", phys_out = ".", trace_file;
  CLI::App* physics =
      app.add_subcommand("physics", "mountain-car analysis report");
  physics->add_option("--gravity", g_accel, "gravitational acceleration");
  physics->add_option("--engine", a_engine, "engine acceleration");
  physics->add_option("--offset", offset, "height integration constant");
  physics->add_option("--x0", x0, "start position");
  physics->add_option("--dynamics", dynamics, "printed|conventional");
  physics->add_option("--dx", dx, "height profile sampling step");
  physics->add_option("--out", phys_out, "output directory");
  physics->add_option("--trace", trace_file,
                      "also write the baseline trajectory CSV (file name)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run(run_flags);
    if (sweep->parsed()) {
      if (etas.empty()) {
        // Default sweep grid: 30 log-spaced points in [1e-3, 1].
        for (int i = 0; i < 30; ++i)
          etas.push_back(std::pow(10.0, -3.0 + 3.0 * i / 29.0));
      }
      return cmd_sweep(sweep_flags, etas, probe_trial);
    }
    if (physics->parsed())
      return cmd_physics(g_accel, a_engine, offset, x0, dynamics, dx, phys_out,
                         trace_file);
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
