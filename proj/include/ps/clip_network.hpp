#pragma once

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>

#include "ps/random.hpp"

namespace ps {

enum class Policy { Basic, Softmax };

/// Agent hyperparameters. Construction validates ranges; the fields stay
/// plain so configs can be assembled piecewise and re-validated.
struct PSParams {
  double lambda_reward = 1.0;  // reward magnitude handed out on success
  double gamma_damp = 0.0;     // per-step relaxation of h toward 1, in [0,1]
  double eta_glow = 0.0;       // glow decay rate, in [0,1]
  double alpha_softmax = 1.0;  // softmax exponent scale, > 0
  Policy policy = Policy::Basic;

  PSParams() = default;
  PSParams(double lambda, double gamma, double eta, double alpha = 1.0,
           Policy pol = Policy::Basic)
      : lambda_reward(lambda),
        gamma_damp(gamma),
        eta_glow(eta),
        alpha_softmax(alpha),
        policy(pol) {
    validate();
  }

  void validate() const {
    if (!(lambda_reward >= 0.0))
      throw std::invalid_argument("PSParams: lambda_reward must be >= 0");
    if (!(gamma_damp >= 0.0 && gamma_damp <= 1.0))
      throw std::invalid_argument("PSParams: gamma_damp must be in [0,1]");
    if (!(eta_glow >= 0.0 && eta_glow <= 1.0))
      throw std::invalid_argument("PSParams: eta_glow must be in [0,1]");
    if (!(alpha_softmax > 0.0))
      throw std::invalid_argument("PSParams: alpha_softmax must be > 0");
  }
};

/// Two-layer percept -> action memory. Each directed edge (s,a) carries a
/// weight h(s,a) >= 1 that drives the hopping probabilities and a glow value
/// g(s,a) in [0,1] that marks how recently the edge was traversed. Shapes are
/// fixed at construction.
template <typename Scalar = double>
struct ClipNetwork {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Matrix h;  // rows = percepts, cols = actions
  Matrix g;

  ClipNetwork(Eigen::Index n_percepts, Eigen::Index n_actions)
      : h(Matrix::Ones(n_percepts, n_actions)),
        g(Matrix::Zero(n_percepts, n_actions)) {
    if (n_percepts < 1 || n_actions < 1)
      throw std::invalid_argument("ClipNetwork: counts must be >= 1");
  }

  Eigen::Index n_percepts() const { return h.rows(); }
  Eigen::Index n_actions() const { return h.cols(); }
};

using ClipNetworkd = ClipNetwork<double>;

namespace detail {

template <typename Scalar>
void check_percept(const ClipNetwork<Scalar>& net, Eigen::Index percept) {
  if (percept < 0 || percept >= net.n_percepts())
    throw std::out_of_range("percept index out of range");
}

}  // namespace detail

/// Hopping probabilities out of one percept. Basic divides the h row by its
/// sum; Softmax exponentiates alpha*h after subtracting the row maximum, which
/// leaves the distribution unchanged but cannot overflow however large the
/// weights grow.
template <typename Scalar>
Eigen::Vector<Scalar, Eigen::Dynamic> hop_probabilities(
    const ClipNetwork<Scalar>& net, Eigen::Index percept,
    const PSParams& params) {
  detail::check_percept(net, percept);
  const auto row = net.h.row(percept).transpose().array();
  Eigen::Vector<Scalar, Eigen::Dynamic> p(net.n_actions());
  if (params.policy == Policy::Basic) {
    p = row / row.sum();
  } else {
    const Scalar alpha = static_cast<Scalar>(params.alpha_softmax);
    p = (alpha * (row - row.maxCoeff())).exp();
    p /= p.sum();
  }
  return p;
}

/// Draws one action from the hopping distribution and marks the traversed
/// edge: g(percept, action) = 1. The cumulative walk threshold uses one
/// uniform draw per call.
template <typename Scalar>
Eigen::Index sample_action(ClipNetwork<Scalar>& net, Eigen::Index percept,
                           const PSParams& params, Rng& rng) {
  detail::check_percept(net, percept);
  const auto row = net.h.row(percept);
  const Eigen::Index n = net.n_actions();
  const double u = uniform01(rng);

  Eigen::Index action = n - 1;
  if (params.policy == Policy::Basic) {
    const Scalar threshold = static_cast<Scalar>(u) * row.sum();
    Scalar cum = 0;
    for (Eigen::Index a = 0; a < n; ++a) {
      cum += row[a];
      if (cum > threshold) {
        action = a;
        break;
      }
    }
  } else {
    const Scalar alpha = static_cast<Scalar>(params.alpha_softmax);
    const Scalar shift = row.maxCoeff();
    Scalar total = 0;
    for (Eigen::Index a = 0; a < n; ++a) total += std::exp(alpha * (row[a] - shift));
    const Scalar threshold = static_cast<Scalar>(u) * total;
    Scalar cum = 0;
    for (Eigen::Index a = 0; a < n; ++a) {
      cum += std::exp(alpha * (row[a] - shift));
      if (cum > threshold) {
        action = a;
        break;
      }
    }
  }
  net.g(percept, action) = Scalar(1);
  return action;
}

/// One learning update, applied after the environment has answered the
/// current step. Order is fixed: the reward lands on the glow values as they
/// are now (the edge traversed this step still carries g = 1), and only then
/// does the glow decay.
///
///   h <- h - gamma*(h - 1) + g*reward
///   g <- g*(1 - eta)
template <typename Scalar>
void learn_step(ClipNetwork<Scalar>& net, const PSParams& params,
                Scalar reward) {
  if (!(reward >= Scalar(0)))
    throw std::invalid_argument("learn_step: reward must be >= 0");
  const Scalar gamma = static_cast<Scalar>(params.gamma_damp);
  if (gamma != Scalar(0) || reward != Scalar(0)) {
    net.h.array() += reward * net.g.array() - gamma * (net.h.array() - Scalar(1));
  }
  const Scalar keep = Scalar(1) - static_cast<Scalar>(params.eta_glow);
  if (keep != Scalar(1)) net.g.array() *= keep;
}

/// Clears all glow, leaving the weights untouched. Called between trials so
/// a reward cannot credit edges traversed in a previous episode.
template <typename Scalar>
void reset_glow(ClipNetwork<Scalar>& net) {
  net.g.setZero();
}

}  // namespace ps
