#include "ps/csv.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "ps/version.hpp"

namespace ps {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 6);
  if (res.ec != std::errc())
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

void write_curve_csv(std::ostream& out, const LearningCurve& curve) {
  out << "trial,mean_steps,std_steps\n";
  for (Eigen::Index t = 0; t < curve.mean_steps.size(); ++t) {
    out << (t + 1) << ',' << format_double(curve.mean_steps[t]) << ','
        << format_double(curve.std_steps[t]) << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "eta,mean_steps_at_probe\n";
  for (const SweepRow& row : rows) {
    out << format_double(row.eta) << ',' << format_double(row.mean_steps)
        << '\n';
  }
}

void write_matrix_csv(std::ostream& out,
                      const Eigen::Ref<const Eigen::MatrixXd>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      out << format_double(m(r, c));
    }
    out << '\n';
  }
}

void write_height_profile_csv(std::ostream& out, const PhysicsParams& params,
                              double x_lo, double x_hi, double dx) {
  if (!(dx > 0.0) || !(x_hi >= x_lo))
    throw std::invalid_argument("height profile: bad sample range");
  out << "x,height\n";
  const int n = static_cast<int>((x_hi - x_lo) / dx + 0.5);
  for (int i = 0; i <= n; ++i) {
    const double x = std::min(x_lo + i * dx, x_hi);
    out << format_double(x) << ',' << format_double(height(x, params)) << '\n';
  }
}

void write_trajectory_csv(std::ostream& out,
                          const std::vector<McTrajectoryPoint>& trace) {
  out << "step,x,v,action,reward\n";
  for (const McTrajectoryPoint& p : trace) {
    out << p.step << ',' << format_double(p.x) << ',' << format_double(p.v)
        << ',' << p.action << ',' << format_double(p.reward) << '\n';
  }
}

std::string manifest_json(const RunManifest& manifest) {
  const ExperimentConfig& c = manifest.config;
  nlohmann::json j{
      {"version", manifest.version.empty() ? kVersion : manifest.version},
      {"artifact", manifest.artifact},
      {"duration_seconds", manifest.duration_seconds},
      {"capped_trials", manifest.capped_trials},
      {"config",
       {{"env", to_string(c.env)},
        {"agents", c.agents},
        {"trials", c.trials},
        {"seed", c.seed},
        {"max_steps_per_trial", c.max_steps_per_trial},
        {"glow_reset_between_trials", c.glow_reset_between_trials},
        {"dynamics_order", to_string(c.dynamics_order)},
        {"mc_bins", c.mc_bins},
        {"threads", c.threads},
        {"maze_file", c.maze_file},
        {"params",
         {{"lambda", c.params.lambda_reward},
          {"gamma", c.params.gamma_damp},
          {"eta", c.params.eta_glow},
          {"alpha", c.params.alpha_softmax},
          {"policy", to_string(c.params.policy)}}}}}};
  return j.dump(2) + "\n";
}

}  // namespace ps
