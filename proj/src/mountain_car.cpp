#include "ps/mountain_car.hpp"

#include <algorithm>
#include <cmath>

namespace ps {

McStep mc_step(const MountainCarState& s, MCAction a, DynamicsOrder order) {
  double v = s.v + 0.001 * thrust(a) - 0.0025 * std::cos(3.0 * s.x);
  v = std::clamp(v, -kMcMaxSpeed, kMcMaxSpeed);
  const double x = s.x + (order == DynamicsOrder::AsPrinted ? s.v : v);
  if (x >= kMcGoalX) return {{kMcGoalX, v}, 1.0, true};
  if (x <= kMcMinX) return {{kMcMinX, 0.0}, 0.0, false};
  return {{x, v}, 0.0, false};
}

int discretize(const MountainCarState& s, const Discretizer& d) {
  if (s.x < kMcMinX || s.x > kMcGoalX || s.v < -kMcMaxSpeed ||
      s.v > kMcMaxSpeed)
    throw std::out_of_range("discretize: state outside the legal box");
  // Normalized fraction times bin count; exact at the v = 0 midline.
  int bx = static_cast<int>(
      std::floor((s.x - kMcMinX) / (kMcGoalX - kMcMinX) * d.bins_x));
  int bv = static_cast<int>(
      std::floor((s.v + kMcMaxSpeed) / (2.0 * kMcMaxSpeed) * d.bins_v));
  bx = std::min(bx, d.bins_x - 1);
  bv = std::min(bv, d.bins_v - 1);
  return bx * d.bins_v + bv;
}

EnvStep MountainCarEnv::step(int action_index) {
  if (done_) throw std::logic_error("MountainCarEnv: episode already finished");
  const McStep r = mc_step(state_, mc_action_from_index(action_index), order_);
  state_ = r.state;
  done_ = r.done;
  return {r.done ? kTerminalPercept : discretize(state_, disc_), r.reward,
          r.done};
}

}  // namespace ps
