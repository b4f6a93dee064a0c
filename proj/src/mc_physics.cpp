#include "ps/mc_physics.hpp"

#include <cmath>
#include <stdexcept>

namespace ps {

namespace {

constexpr double kRootTol = 1e-9;
constexpr double kScanStep = 1e-3;

// Work surplus of a steady push from rest at x0 to x; the reachable region
// is where it stays non-negative.
double work_surplus(double x, double x0, const PhysicsParams& p) {
  return p.a_engine * std::abs(x - x0) -
         p.g_accel * (height(x, p) - height(x0, p));
}

}  // namespace

void PhysicsParams::validate() const {
  if (!(g_accel > 0.0))
    throw std::invalid_argument("PhysicsParams: g_accel must be > 0");
  if (!(a_engine >= 0.0))
    throw std::invalid_argument("PhysicsParams: a_engine must be >= 0");
}

double height(double x, const PhysicsParams& p) {
  p.validate();
  return 0.0025 / (3.0 * p.g_accel) * std::sin(3.0 * x) +
         p.integration_constant;
}

double hill_bottom(const PhysicsParams& p) {
  p.validate();
  // d(height)/dx has the sign of cos(3x); exactly one sign change on the
  // domain (at 3x = -pi/2).
  double lo = kMcMinX, hi = kMcGoalX;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (std::cos(3.0 * mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double max_reach(double x0, PushDirection dir, const PhysicsParams& p) {
  p.validate();
  if (x0 < kMcMinX || x0 > kMcGoalX)
    throw std::invalid_argument("max_reach: x0 outside the domain");
  const double edge = dir == PushDirection::Right ? kMcGoalX : kMcMinX;
  const double sign = dir == PushDirection::Right ? 1.0 : -1.0;

  // March toward the edge until the surplus first turns negative, then
  // bisect inside that cell. No sign change means the edge is reachable.
  double prev = x0;
  for (double x = x0 + sign * kScanStep;; x += sign * kScanStep) {
    if ((edge - x) * sign < 0.0) x = edge;
    if (work_surplus(x, x0, p) < 0.0) {
      double lo = prev, hi = x;
      while (std::abs(hi - lo) > kRootTol) {
        const double mid = 0.5 * (lo + hi);
        (work_surplus(mid, x0, p) >= 0.0 ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
    if (x == edge) return edge;
    prev = x;
  }
}

bool feasibility_check(double x0, double x_goal, const PhysicsParams& p) {
  p.validate();
  if (!(x0 < x_goal))
    throw std::invalid_argument("feasibility_check: requires x0 < x_goal");
  return p.a_engine * (x_goal - x0) >=
         p.g_accel * (height(x_goal, p) - height(x0, p));
}

BaselineRun baseline_strategy(const McStepFn& step_fn, MountainCarState start,
                              int max_steps,
                              std::vector<McTrajectoryPoint>* trace) {
  MountainCarState s = start;
  BaselineRun run;
  run.min_x = s.x;
  bool reversing = true;
  bool seen_negative = false;
  for (int step = 1; step <= max_steps; ++step) {
    if (reversing && seen_negative && s.v >= 0.0) reversing = false;
    const MCAction action = reversing ? MCAction::Reverse : MCAction::Forward;
    const McStep r = step_fn(s, action);
    s = r.state;
    if (reversing)
      ++run.reverse_steps;
    else
      ++run.forward_steps;
    run.total_steps = step;
    if (s.v < 0.0) seen_negative = true;
    run.min_x = std::min(run.min_x, s.x);
    run.max_abs_v = std::max(run.max_abs_v, std::abs(s.v));
    if (trace) trace->push_back({step, s.x, s.v, thrust(action), r.reward});
    if (r.done) return run;
  }
  throw std::runtime_error(
      "baseline_strategy: goal not reached within the step budget "
      "(dynamics mismatch)");
}

}  // namespace ps
