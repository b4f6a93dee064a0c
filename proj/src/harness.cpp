#include "ps/harness.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace ps {

void ExperimentConfig::validate() const {
  if (agents < 1) throw std::invalid_argument("config: agents must be >= 1");
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (max_steps_per_trial < 1)
    throw std::invalid_argument("config: max_steps_per_trial must be >= 1");
  if (mc_bins < 1) throw std::invalid_argument("config: mc_bins must be >= 1");
  if (threads < 0) throw std::invalid_argument("config: threads must be >= 0");
  params.validate();
}

LearningCurve curve_from_steps(const StepsMatrix& steps) {
  const Eigen::Index agents = steps.rows();
  const Eigen::Index trials = steps.cols();
  LearningCurve curve;
  curve.mean_steps.resize(trials);
  curve.std_steps.resize(trials);
  for (Eigen::Index t = 0; t < trials; ++t) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < agents; ++i) sum += steps(i, t);
    const double mean = sum / static_cast<double>(agents);
    double sq = 0.0;
    for (Eigen::Index i = 0; i < agents; ++i) {
      const double d = static_cast<double>(steps(i, t)) - mean;
      sq += d * d;
    }
    curve.mean_steps[t] = mean;
    curve.std_steps[t] = std::sqrt(sq / static_cast<double>(agents));
  }
  return curve;
}

namespace {

template <typename Env>
ExperimentResult run_ensemble(const ExperimentConfig& cfg, const Env& proto) {
  StepsMatrix steps(cfg.agents, cfg.trials);
  std::atomic<std::uint64_t> capped{0};

  const auto worker = [&](int begin, int end) {
    std::uint64_t capped_local = 0;
    for (int i = begin; i < end; ++i) {
      Env env = proto;
      ClipNetworkd net(env.percept_count(), Env::action_count());
      Rng rng = make_agent_rng(cfg.seed, static_cast<std::uint64_t>(i));
      for (int t = 0; t < cfg.trials; ++t) {
        if (cfg.glow_reset_between_trials) reset_glow(net);
        const int percept = env_reset(env, rng);
        const TrialResult r = run_trial(net, env, percept, cfg.params, rng,
                                        cfg.max_steps_per_trial);
        steps(i, t) = static_cast<std::uint32_t>(r.steps);
        capped_local += r.capped ? 1 : 0;
      }
    }
    capped += capped_local;
  };

  int n_threads = cfg.threads;
  if (n_threads == 0)
    n_threads = static_cast<int>(std::thread::hardware_concurrency());
  n_threads = std::max(1, std::min(n_threads, cfg.agents));

  if (n_threads == 1) {
    worker(0, cfg.agents);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    const int chunk = (cfg.agents + n_threads - 1) / n_threads;
    for (int k = 0; k < n_threads; ++k) {
      const int begin = k * chunk;
      const int end = std::min(cfg.agents, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  ExperimentResult result;
  result.curve = curve_from_steps(steps);
  result.steps = std::move(steps);
  result.capped_trials = capped.load();
  return result;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  switch (config.env) {
    case EnvKind::GridWorld: {
      const GridWorld proto = config.maze_file.empty()
                                  ? GridWorld::default_maze()
                                  : GridWorld::load_file(config.maze_file);
      return run_ensemble(config, proto);
    }
    case EnvKind::MountainCarRandom:
    case EnvKind::MountainCarFixed: {
      const StartMode mode = config.env == EnvKind::MountainCarRandom
                                 ? StartMode::RandomUniform
                                 : StartMode::FixedBottom;
      const MountainCarEnv proto(mode, {config.mc_bins, config.mc_bins},
                                 config.dynamics_order);
      return run_ensemble(config, proto);
    }
  }
  throw std::invalid_argument("config: unknown environment");
}

std::vector<SweepRow> eta_sweep(const ExperimentConfig& base,
                                const std::vector<double>& etas,
                                int probe_trial) {
  if (etas.empty()) throw std::invalid_argument("eta_sweep: empty eta list");
  if (probe_trial < 0 || probe_trial >= base.trials)
    throw std::invalid_argument("eta_sweep: probe_trial out of range");
  std::vector<SweepRow> rows;
  rows.reserve(etas.size());
  for (const double eta : etas) {
    ExperimentConfig cfg = base;
    cfg.params.eta_glow = eta;
    cfg.params.validate();
    const ExperimentResult r = run_experiment(cfg);
    rows.push_back({eta, r.curve.mean_steps[probe_trial]});
  }
  return rows;
}

double initial_slope(const LearningCurve& curve, int window) {
  const Eigen::Index n = curve.mean_steps.size();
  if (window < 2 || window > n)
    throw std::invalid_argument("initial_slope: window must be in [2, trials]");
  const double tbar = 0.5 * (window - 1);
  const double ybar = curve.mean_steps.head(window).mean();
  double num = 0.0, den = 0.0;
  for (int t = 0; t < window; ++t) {
    const double dt = t - tbar;
    num += dt * (curve.mean_steps[t] - ybar);
    den += dt * dt;
  }
  return num / den;
}

const char* to_string(EnvKind env) {
  switch (env) {
    case EnvKind::GridWorld: return "gridworld";
    case EnvKind::MountainCarRandom: return "mc-random";
    case EnvKind::MountainCarFixed: return "mc-fixed";
  }
  return "?";
}

const char* to_string(Policy policy) {
  return policy == Policy::Basic ? "basic" : "softmax";
}

const char* to_string(DynamicsOrder order) {
  return order == DynamicsOrder::AsPrinted ? "printed" : "conventional";
}

}  // namespace ps
