#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spinchain/adjacency.hpp"

namespace spinchain {

// Site-0 propagator coefficients and their exact time derivatives.
struct SiteZeroCoefficients {
  double pi_x, delta_x, pi_y, delta_y;
  double d_pi_x, d_delta_x, d_pi_y, d_delta_y;
};

// All four coefficient vectors at one time.
struct CoefficientFrame {
  Eigen::VectorXd pi_x, delta_x, pi_y, delta_y;
};

// Resummed propagator coefficients
//   Pi^x(t)    = U cos(Lambda t) U^T e0,   Delta^x(t) = V sin(Lambda t) U^T e0,
//   Pi^y(t)    = V cos(Lambda t) V^T e0,   Delta^y(t) = U sin(Lambda t) V^T e0,
// evaluable at arbitrary t. Derivatives replace cos -> -Lambda sin and
// sin -> Lambda cos. Immutable after construction; evaluation is const and
// safe to call concurrently.
class CoefficientEvaluator {
 public:
  explicit CoefficientEvaluator(const AdjacencyDecomposition& decomp);
  explicit CoefficientEvaluator(const ChainSpec& spec)
      : CoefficientEvaluator(build_adjacency(spec)) {}

  int n_sites() const { return static_cast<int>(lambda_.size()) - 1; }

  SiteZeroCoefficients site0(double t) const;
  CoefficientFrame frame(double t) const;

  // f(t) = Pi_0^2 + Delta_0^2 of the x family and its exact derivative.
  double f(double t) const;
  double df(double t) const;

  const Eigen::VectorXd& lambda() const { return lambda_; }

 private:
  Eigen::MatrixXd u_, v_;
  Eigen::VectorXd lambda_;
  Eigen::VectorXd wu_, wv_;          // U^T e0, V^T e0
  Eigen::VectorXd ax_, bx_, ay_, by_;  // site-0 mode weights
};

// Coefficient vectors tabulated on a strictly increasing time grid,
// matrices are (N+1) x n_times.
struct CoefficientSet {
  Eigen::VectorXd times;
  Eigen::MatrixXd pi_x, delta_x, pi_y, delta_y;
  Eigen::MatrixXd d_pi_x, d_delta_x, d_pi_y, d_delta_y;
};

CoefficientSet coefficients(const AdjacencyDecomposition& decomp,
                            const std::vector<double>& times);

// Max deviation between the truncated power series of the coefficient
// expansion and the resummed values at time t. Self-test hook; throws if a
// series term overflows.
double coefficient_series_check(const AdjacencyDecomposition& decomp, double t,
                                int order);

// Default grid step for measure integration (Bessel oscillations need
// >= 10 points per period).
inline constexpr double kDefaultTimeStep = 0.05;

std::vector<double> time_grid(double t_max, double dt = kDefaultTimeStep);

}  // namespace spinchain
