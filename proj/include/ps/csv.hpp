#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "ps/harness.hpp"
#include "ps/mc_physics.hpp"

namespace ps {

/// Locale-independent "%.6g"-style rendering ('.' decimal point, six
/// significant digits), so artifacts are byte-stable across machines.
std::string format_double(double value);

/// Columns: trial (1-based), mean_steps, std_steps.
void write_curve_csv(std::ostream& out, const LearningCurve& curve);

/// Columns: eta, mean_steps_at_probe.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Debug dump of an h or g matrix: one row per percept, one column per
/// action, no header.
void write_matrix_csv(std::ostream& out,
                      const Eigen::Ref<const Eigen::MatrixXd>& m);

/// Columns: x, height. Samples [x_lo, x_hi] inclusive with step dx.
void write_height_profile_csv(std::ostream& out, const PhysicsParams& params,
                              double x_lo, double x_hi, double dx);

/// Columns: step, x, v, action, reward.
void write_trajectory_csv(std::ostream& out,
                          const std::vector<McTrajectoryPoint>& trace);

/// Replay record written next to every CSV artifact.
struct RunManifest {
  ExperimentConfig config;
  std::string version;
  double duration_seconds = 0.0;
  std::uint64_t capped_trials = 0;
  std::string artifact;  // file name of the CSV this manifest accompanies
};

std::string manifest_json(const RunManifest& manifest);

}  // namespace ps
