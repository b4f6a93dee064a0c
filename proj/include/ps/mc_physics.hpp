#pragma once

#include <functional>
#include <vector>

#include "ps/mountain_car.hpp"

namespace ps {

/// Constants of the continuous work-energy analysis behind the mountain-car
/// dynamics. The gravity term of the discrete map is g*cos(phi) =
/// 0.0025*cos(3x), so the slope angle never appears explicitly.
struct PhysicsParams {
  double g_accel = 0.0025;          // gravitational acceleration
  double a_engine = 0.001;          // engine acceleration magnitude
  double integration_constant = 0.0;

  void validate() const;
};

/// Hill profile: h(x) = 0.0025/(3*g) * sin(3x) + C.
double height(double x, const PhysicsParams& p = {});

/// Position of the height minimum on [-1.2, 0.5], found by bisecting the
/// derivative. Lands at -pi/6 for any positive gravity.
double hill_bottom(const PhysicsParams& p = {});

enum class PushDirection { Left, Right };

/// Furthest point reachable from rest at x0 when pushing steadily in one
/// direction: the first root of  a*|x - x0| = g*(h(x) - h(x0))  away from x0.
/// Returns the domain boundary if the work surplus never runs out.
double max_reach(double x0, PushDirection dir, const PhysicsParams& p = {});

/// Work-energy test for a direct push from x0 up to x_goal (requires
/// x0 < x_goal):  a*(x_goal - x0) >= g*(h_goal - h_0).
bool feasibility_check(double x0, double x_goal, const PhysicsParams& p = {});

using McStepFn = std::function<McStep(const MountainCarState&, MCAction)>;

struct BaselineRun {
  int total_steps = 0;
  int reverse_steps = 0;
  int forward_steps = 0;
  double min_x = 0.0;
  double max_abs_v = 0.0;
};

/// Two-phase reference strategy: push Reverse until the car has stopped
/// (velocity back at >= 0 after having been negative), then push Forward
/// until the goal. Throws std::runtime_error if the goal is not reached
/// within max_steps, which signals a dynamics mismatch.
BaselineRun baseline_strategy(const McStepFn& step_fn,
                              MountainCarState start = {-0.5, 0.0},
                              int max_steps = 10000,
                              std::vector<McTrajectoryPoint>* trace = nullptr);

}  // namespace ps
