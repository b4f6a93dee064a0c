#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "ps/harness.hpp"

using ps::ClipNetworkd;
using ps::curve_from_steps;
using ps::EnvKind;
using ps::eta_sweep;
using ps::ExperimentConfig;
using ps::ExperimentResult;
using ps::GridWorld;
using ps::initial_slope;
using ps::LearningCurve;
using ps::Policy;
using ps::PSParams;
using ps::run_experiment;
using ps::run_trial;

namespace {

ExperimentConfig small_grid_config() {
  ExperimentConfig cfg;
  cfg.env = EnvKind::GridWorld;
  cfg.agents = 40;
  cfg.trials = 8;
  cfg.params = PSParams(1.0, 0.0, 0.12, 1.0, Policy::Softmax);
  cfg.seed = 97;
  cfg.threads = 1;
  return cfg;
}

}  // namespace

TEST_CASE("a network pre-trained along the optimal path walks it in 14 steps") {
  GridWorld env = GridWorld::default_maze();
  ClipNetworkd net(env.percept_count(), GridWorld::action_count());

  // Make the optimal route effectively deterministic by loading huge weights
  // on the correct action of every cell along it.
  using GA = ps::GridAction;
  const std::vector<std::pair<ps::GridCell, GA>> route{
      {{1, 3}, GA::Right}, {{2, 3}, GA::Down},  {{2, 4}, GA::Down},
      {{2, 5}, GA::Right}, {{3, 5}, GA::Right}, {{4, 5}, GA::Right},
      {{5, 5}, GA::Up},    {{5, 4}, GA::Right}, {{6, 4}, GA::Right},
      {{7, 4}, GA::Right}, {{8, 4}, GA::Right}, {{9, 4}, GA::Up},
      {{9, 3}, GA::Up},    {{9, 2}, GA::Up}};
  for (const auto& [cell, action] : route)
    net.h(env.percept_of(cell), static_cast<int>(action)) = 1e12;

  ps::Rng rng(11);
  const int percept = env.reset();
  const auto r = run_trial(net, env, percept, PSParams(), rng, 1000000);
  CHECK(r.steps == 14);
  CHECK(!r.capped);
}

TEST_CASE("the appendix action schedule finishes in 89 steps") {
  // 36 reverse pushes followed by forward pushes, as-printed dynamics:
  // the goal-entering step is number 89 (53 forward pushes).
  ps::Rng rng(0);
  ps::MountainCarEnv env(ps::StartMode::FixedBottom);
  env.reset(rng);
  int steps = 0;
  ps::EnvStep s{};
  while (true) {
    const int action = steps < 36 ? 0 : 2;  // Reverse then Forward
    s = env.step(action);
    ++steps;
    if (s.done) break;
    REQUIRE(steps < 200);
  }
  CHECK(steps == 89);
  CHECK(s.reward == 1.0);
}

TEST_CASE("step cap flags the trial") {
  GridWorld env = GridWorld::default_maze();
  ClipNetworkd net(env.percept_count(), GridWorld::action_count());
  ps::Rng rng(3);
  const int percept = env.reset();
  const auto r = run_trial(net, env, percept, PSParams(), rng, 1);
  CHECK(r.steps == 1);
  CHECK(r.capped);
}

TEST_CASE("capped trials enter the mean at the cap value") {
  // The optimal path needs 14 steps, so a cap of 5 censors every trial.
  ExperimentConfig cfg = small_grid_config();
  cfg.max_steps_per_trial = 5;
  const ExperimentResult r = run_experiment(cfg);
  CHECK(r.capped_trials ==
        static_cast<std::uint64_t>(cfg.agents) * cfg.trials);
  CHECK((r.steps.array() == 5u).all());
  CHECK(r.curve.mean_steps.minCoeff() == 5.0);
  CHECK(r.curve.std_steps.maxCoeff() == 0.0);
}

TEST_CASE("single-agent ensembles report zero sigma") {
  ExperimentConfig cfg = small_grid_config();
  cfg.agents = 1;
  const ExperimentResult r = run_experiment(cfg);
  CHECK(r.curve.std_steps.isZero(0.0));
  CHECK(r.curve.mean_steps.size() == cfg.trials);
}

TEST_CASE("experiments are reproducible and thread-count independent") {
  ExperimentConfig cfg = small_grid_config();
  const ExperimentResult a = run_experiment(cfg);
  const ExperimentResult b = run_experiment(cfg);
  CHECK((a.steps.array() == b.steps.array()).all());
  CHECK((a.curve.mean_steps.array() == b.curve.mean_steps.array()).all());
  CHECK((a.curve.std_steps.array() == b.curve.std_steps.array()).all());

  cfg.threads = 3;
  const ExperimentResult c = run_experiment(cfg);
  CHECK((a.steps.array() == c.steps.array()).all());
  CHECK((a.curve.mean_steps.array() == c.curve.mean_steps.array()).all());
  CHECK((a.curve.std_steps.array() == c.curve.std_steps.array()).all());
}

TEST_CASE("agent order does not matter beyond summation noise") {
  const ExperimentResult r = run_experiment(small_grid_config());
  ps::StepsMatrix shuffled = r.steps;
  std::vector<int> order(shuffled.rows());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937 g(5);
  std::shuffle(order.begin(), order.end(), g);
  for (Eigen::Index i = 0; i < shuffled.rows(); ++i)
    shuffled.row(i) = r.steps.row(order[i]);

  const LearningCurve permuted = curve_from_steps(shuffled);
  for (Eigen::Index t = 0; t < permuted.mean_steps.size(); ++t) {
    CHECK(std::abs(permuted.mean_steps[t] - r.curve.mean_steps[t]) <= 1e-9);
    CHECK(std::abs(permuted.std_steps[t] - r.curve.std_steps[t]) <= 1e-9);
  }
}

TEST_CASE("no grid trial beats the shortest path") {
  ExperimentConfig cfg = small_grid_config();
  cfg.agents = 120;
  cfg.trials = 30;
  const ExperimentResult r = run_experiment(cfg);
  CHECK(r.steps.minCoeff() >= 14u);
  CHECK(r.curve.mean_steps.minCoeff() >= 14.0);

  // Weak learning trend, asserted at desk scale: late trials beat early ones.
  const double first = r.curve.mean_steps.head(5).mean();
  const double last = r.curve.mean_steps.tail(5).mean();
  CHECK(last < first);
}

TEST_CASE("glow carry-over across trials is configurable") {
  ExperimentConfig reset_cfg = small_grid_config();
  ExperimentConfig carry_cfg = reset_cfg;
  carry_cfg.glow_reset_between_trials = false;
  const ExperimentResult a = run_experiment(reset_cfg);
  const ExperimentResult b = run_experiment(carry_cfg);
  CHECK(!(a.steps.array() == b.steps.array()).all());
}

TEST_CASE("mountain-car ensembles run under both dynamics orders") {
  ExperimentConfig cfg;
  cfg.env = EnvKind::MountainCarRandom;
  cfg.agents = 10;
  cfg.trials = 2;
  cfg.params = PSParams(1.0, 0.0, 0.02, 1.0, Policy::Softmax);
  cfg.seed = 5;
  cfg.threads = 2;
  for (const auto order :
       {ps::DynamicsOrder::AsPrinted, ps::DynamicsOrder::Conventional}) {
    cfg.dynamics_order = order;
    const ExperimentResult r = run_experiment(cfg);
    CHECK(r.capped_trials == 0);
    CHECK(r.steps.minCoeff() >= 1u);
  }

  cfg.env = EnvKind::MountainCarFixed;
  cfg.mc_bins = 30;
  const ExperimentResult r = run_experiment(cfg);
  CHECK(r.curve.mean_steps.size() == 2);
}

TEST_CASE("eta_sweep probes one trial across runs") {
  ExperimentConfig cfg = small_grid_config();
  cfg.agents = 20;
  cfg.trials = 4;
  const std::vector<double> etas{0.05, 0.5};
  const auto rows = eta_sweep(cfg, etas, 3);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].eta == 0.05);
  CHECK(rows[1].eta == 0.5);

  // Each row must equal the dedicated run with that eta.
  ExperimentConfig direct = cfg;
  direct.params.eta_glow = 0.5;
  CHECK(rows[1].mean_steps == run_experiment(direct).curve.mean_steps[3]);

  CHECK_THROWS_AS(eta_sweep(cfg, {}, 0), std::invalid_argument);
  CHECK_THROWS_AS(eta_sweep(cfg, {0.1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(eta_sweep(cfg, {1.5}, 0), std::invalid_argument);
}

TEST_CASE("initial slope") {
  LearningCurve curve;
  curve.mean_steps = Eigen::VectorXd::Constant(20, 42.0);
  curve.std_steps = Eigen::VectorXd::Zero(20);
  CHECK(initial_slope(curve, 10) == 0.0);

  for (int t = 0; t < 20; ++t) curve.mean_steps[t] = 100.0 - (t + 1);
  CHECK(initial_slope(curve, 10) == doctest::Approx(-1.0).epsilon(1e-12));

  CHECK_THROWS_AS(initial_slope(curve, 1), std::invalid_argument);
  CHECK_THROWS_AS(initial_slope(curve, 21), std::invalid_argument);
}

TEST_CASE("config validation names the offending field") {
  ExperimentConfig cfg = small_grid_config();
  cfg.agents = 0;
  CHECK_THROWS_WITH_AS(cfg.validate(), "config: agents must be >= 1",
                       std::invalid_argument);
  cfg = small_grid_config();
  cfg.trials = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_grid_config();
  cfg.params.eta_glow = 1.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = small_grid_config();
  cfg.max_steps_per_trial = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
