#pragma once

#include <stdexcept>
#include <vector>

#include "ps/env.hpp"
#include "ps/random.hpp"

namespace ps {

inline constexpr double kMcMinX = -1.2;
inline constexpr double kMcGoalX = 0.5;
inline constexpr double kMcMaxSpeed = 0.07;

enum class MCAction : int { Reverse = -1, None = 0, Forward = 1 };
inline constexpr int kMCActionCount = 3;

inline int thrust(MCAction a) { return static_cast<int>(a); }

inline MCAction mc_action_from_index(int index) {
  switch (index) {
    case 0: return MCAction::Reverse;
    case 1: return MCAction::None;
    case 2: return MCAction::Forward;
  }
  throw std::out_of_range("MCAction: index out of range");
}

inline int mc_action_index(MCAction a) { return thrust(a) + 1; }

/// Which value feeds the position update.
///   AsPrinted:    x' = x + v      (old velocity on the right-hand side)
///   Conventional: x' = x + v'     (velocity updated and clamped first)
/// The two maps differ qualitatively: Conventional is energy-conserving while
/// AsPrinted slowly pumps energy into the car over oscillations.
enum class DynamicsOrder { AsPrinted, Conventional };

struct MountainCarState {
  double x = -0.5;
  double v = 0.0;
};

struct McStep {
  MountainCarState state;
  double reward;
  bool done;
};

/// One dynamics step:
///   v' = v + 0.001*thrust - 0.0025*cos(3x), |v'| clamped to 0.07
///   x' per DynamicsOrder
/// Crossing x >= 0.5 ends the episode with reward 1 (position capped at the
/// goal). Hitting the left bound parks the car at -1.2 with zero velocity.
McStep mc_step(const MountainCarState& s, MCAction a,
               DynamicsOrder order = DynamicsOrder::AsPrinted);

enum class StartMode { RandomUniform, FixedBottom };

/// RandomUniform draws x ~ U[-1.2, 0.5) and v ~ U[-0.07, 0.07); FixedBottom
/// always returns (-0.5, 0).
template <typename RngT>
MountainCarState mc_reset(StartMode mode, RngT& rng) {
  if (mode == StartMode::FixedBottom) return {-0.5, 0.0};
  const double x = kMcMinX + (kMcGoalX - kMcMinX) * uniform01(rng);
  const double v = -kMcMaxSpeed + 2.0 * kMcMaxSpeed * uniform01(rng);
  return {x, v};
}

/// Uniform binning of the bounded (x, v) box. Bins are left-closed; the two
/// upper edges fold into the last bin so the mapping is total.
struct Discretizer {
  int bins_x = 20;
  int bins_v = 20;
  int percept_count() const { return bins_x * bins_v; }
};

/// percept = bin_x * bins_v + bin_v. Throws std::out_of_range for states
/// outside the legal box.
int discretize(const MountainCarState& s, const Discretizer& d);

struct McTrajectoryPoint {
  int step;
  double x;
  double v;
  int action;  // thrust value in {-1, 0, 1}
  double reward;
};

/// Episode wrapper pairing the dynamics with a discretizer, as consumed by
/// the experiment harness.
class MountainCarEnv {
 public:
  MountainCarEnv(StartMode mode, Discretizer disc = {},
                 DynamicsOrder order = DynamicsOrder::AsPrinted)
      : disc_(disc), mode_(mode), order_(order) {
    if (disc.bins_x < 1 || disc.bins_v < 1)
      throw std::invalid_argument("Discretizer: bins must be >= 1");
  }

  template <typename RngT>
  int reset(RngT& rng) {
    state_ = mc_reset(mode_, rng);
    done_ = false;
    return discretize(state_, disc_);
  }

  EnvStep step(int action_index);

  const MountainCarState& state() const { return state_; }
  bool done() const { return done_; }
  int percept_count() const { return disc_.percept_count(); }
  static constexpr int action_count() { return kMCActionCount; }

 private:
  MountainCarState state_;
  Discretizer disc_;
  StartMode mode_;
  DynamicsOrder order_;
  bool done_ = true;
};

}  // namespace ps
