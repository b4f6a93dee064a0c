#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

#include "ps/clip_network.hpp"
#include "ps/env.hpp"
#include "ps/gridworld.hpp"
#include "ps/mountain_car.hpp"

namespace ps {

enum class EnvKind { GridWorld, MountainCarRandom, MountainCarFixed };

struct ExperimentConfig {
  EnvKind env = EnvKind::GridWorld;
  int agents = 1000;
  int trials = 100;
  PSParams params{};
  std::uint64_t seed = 0;
  std::uint64_t max_steps_per_trial = 1'000'000;
  bool glow_reset_between_trials = true;
  DynamicsOrder dynamics_order = DynamicsOrder::AsPrinted;  // mountain-car only
  int mc_bins = 20;        // percepts per axis for mountain-car
  int threads = 0;         // 0 = hardware concurrency
  std::string maze_file;   // empty = built-in maze

  void validate() const;   // throws std::invalid_argument naming the field
};

/// Per-trial ensemble statistics: mean and population standard deviation of
/// the step counts across agents.
struct LearningCurve {
  Eigen::VectorXd mean_steps;
  Eigen::VectorXd std_steps;
};

using StepsMatrix =
    Eigen::Matrix<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic>;

struct ExperimentResult {
  LearningCurve curve;
  StepsMatrix steps;  // agents x trials
  std::uint64_t capped_trials = 0;
};

struct TrialResult {
  std::uint64_t steps = 0;
  bool capped = false;
};

inline int env_reset(GridWorld& env, Rng&) { return env.reset(); }
inline int env_reset(MountainCarEnv& env, Rng& rng) { return env.reset(rng); }

/// One episode: perceive, hop to an action, let the environment answer, then
/// learn, until the goal or the step cap. The returned count includes the
/// goal-entering step; capped trials report max_steps with the flag set.
/// The caller resets the environment (and glow, per config) beforehand.
template <typename Env>
TrialResult run_trial(ClipNetworkd& net, Env& env, int percept,
                      const PSParams& params, Rng& rng,
                      std::uint64_t max_steps) {
  for (std::uint64_t t = 1; t <= max_steps; ++t) {
    const auto action = sample_action(net, percept, params, rng);
    const EnvStep s = env.step(static_cast<int>(action));
    learn_step(net, params, s.reward * params.lambda_reward);
    if (s.done) return {t, false};
    percept = s.percept;
  }
  return {max_steps, true};
}

/// Column-wise mean and population sigma of a steps matrix, reduced in fixed
/// agent order so the result does not depend on scheduling.
LearningCurve curve_from_steps(const StepsMatrix& steps);

/// Runs config.agents independent agents, each with a fresh network, its own
/// environment instance and a random stream derived from (seed, agent index).
/// Agents are distributed over threads; results are identical for any thread
/// count.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct SweepRow {
  double eta;
  double mean_steps;  // at the probe trial
};

/// One run_experiment per eta, probing mean_steps[probe_trial] (0-based).
std::vector<SweepRow> eta_sweep(const ExperimentConfig& base,
                                const std::vector<double>& etas,
                                int probe_trial);

/// Least-squares slope of mean_steps over the first `window` trials.
double initial_slope(const LearningCurve& curve, int window);

const char* to_string(EnvKind env);
const char* to_string(Policy policy);
const char* to_string(DynamicsOrder order);

}  // namespace ps
