#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "ps/csv.hpp"

using ps::format_double;

TEST_CASE("format_double renders six significant digits, C locale") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(0.07) == "0.07");
  CHECK(format_double(15.4) == "15.4");
  CHECK(format_double(870.123456) == "870.123");
  CHECK(format_double(-1.0 / 3.0) == "-0.333333");
  CHECK(format_double(1e-3) == "0.001");
  CHECK(format_double(123456789.0) == "1.23457e+08");
}

TEST_CASE("learning curve CSV layout") {
  ps::LearningCurve curve;
  curve.mean_steps = Eigen::Vector2d(870.5, 15.4);
  curve.std_steps = Eigen::Vector2d(512.25, 1.75);
  std::ostringstream out;
  ps::write_curve_csv(out, curve);
  CHECK(out.str() ==
        "trial,mean_steps,std_steps\n"
        "1,870.5,512.25\n"
        "2,15.4,1.75\n");
}

TEST_CASE("sweep CSV layout") {
  std::ostringstream out;
  ps::write_sweep_csv(out, {{0.07, 45.25}, {0.12, 15.4}});
  CHECK(out.str() ==
        "eta,mean_steps_at_probe\n"
        "0.07,45.25\n"
        "0.12,15.4\n");
}

TEST_CASE("matrix dump: one row per percept") {
  Eigen::MatrixXd m(2, 3);
  m << 1, 2, 3, 4, 5.5, 6;
  std::ostringstream out;
  ps::write_matrix_csv(out, m);
  CHECK(out.str() == "1,2,3\n4,5.5,6\n");
}

TEST_CASE("height profile CSV covers the domain inclusively") {
  std::ostringstream out;
  ps::write_height_profile_csv(out, {}, -1.2, 0.5, 0.005);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,height");
  int rows = 0;
  std::string first, last;
  while (std::getline(in, line)) {
    if (rows == 0) first = line;
    last = line;
    ++rows;
  }
  CHECK(rows == 341);
  CHECK(first.substr(0, 5) == "-1.2,");
  CHECK(last.substr(0, 4) == "0.5,");

  CHECK_THROWS_AS(ps::write_height_profile_csv(out, {}, 0.5, -1.2, 0.005),
                  std::invalid_argument);
}

TEST_CASE("trajectory CSV layout") {
  std::ostringstream out;
  ps::write_trajectory_csv(out, {{1, -0.5, 0.00082, 1, 0.0}});
  CHECK(out.str() ==
        "step,x,v,action,reward\n"
        "1,-0.5,0.00082,1,0\n");
}

TEST_CASE("manifest round-trips the config") {
  ps::RunManifest m;
  m.config.env = ps::EnvKind::MountainCarFixed;
  m.config.agents = 123;
  m.config.seed = 42;
  m.config.params = ps::PSParams(1.0, 0.0, 0.01, 1.0, ps::Policy::Softmax);
  m.config.mc_bins = 30;
  m.duration_seconds = 1.5;
  m.capped_trials = 2;
  m.artifact = "curve.csv";

  const nlohmann::json j = nlohmann::json::parse(ps::manifest_json(m));
  CHECK(j["artifact"] == "curve.csv");
  CHECK(j["capped_trials"] == 2);
  CHECK(j["version"] == "0.1.0");
  CHECK(j["config"]["env"] == "mc-fixed");
  CHECK(j["config"]["agents"] == 123);
  CHECK(j["config"]["seed"] == 42);
  CHECK(j["config"]["mc_bins"] == 30);
  CHECK(j["config"]["params"]["eta"] == 0.01);
  CHECK(j["config"]["params"]["policy"] == "softmax");
  CHECK(j["config"]["glow_reset_between_trials"] == true);
  CHECK(j["config"]["dynamics_order"] == "printed");
}
