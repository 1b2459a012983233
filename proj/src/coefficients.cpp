#include "spinchain/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace spinchain {

CoefficientEvaluator::CoefficientEvaluator(const AdjacencyDecomposition& d)
    : u_(d.u), v_(d.v), lambda_(d.lambda) {
  const int m = static_cast<int>(lambda_.size());
  wu_ = u_.row(0).transpose();   // U^T e0
  wv_ = v_.row(0).transpose();
  ax_.resize(m); bx_.resize(m); ay_.resize(m); by_.resize(m);
  for (int i = 0; i < m; ++i) {
    ax_(i) = u_(0, i) * wu_(i);  // Pi^x_0
    bx_(i) = v_(0, i) * wu_(i);  // Delta^x_0
    ay_(i) = v_(0, i) * wv_(i);  // Pi^y_0
    by_(i) = u_(0, i) * wv_(i);  // Delta^y_0
  }
}

SiteZeroCoefficients CoefficientEvaluator::site0(double t) const {
  SiteZeroCoefficients r{};
  const int m = static_cast<int>(lambda_.size());
  for (int i = 0; i < m; ++i) {
    const double c = std::cos(lambda_(i) * t);
    const double s = std::sin(lambda_(i) * t);
    const double lc = lambda_(i) * c;
    const double ls = lambda_(i) * s;
    r.pi_x += ax_(i) * c;
    r.delta_x += bx_(i) * s;
    r.pi_y += ay_(i) * c;
    r.delta_y += by_(i) * s;
    r.d_pi_x -= ax_(i) * ls;
    r.d_delta_x += bx_(i) * lc;
    r.d_pi_y -= ay_(i) * ls;
    r.d_delta_y += by_(i) * lc;
  }
  return r;
}

CoefficientFrame CoefficientEvaluator::frame(double t) const {
  const Eigen::ArrayXd c = (lambda_.array() * t).cos();
  const Eigen::ArrayXd s = (lambda_.array() * t).sin();
  CoefficientFrame f;
  f.pi_x = u_ * (c * wu_.array()).matrix();
  f.delta_x = v_ * (s * wu_.array()).matrix();
  f.pi_y = v_ * (c * wv_.array()).matrix();
  f.delta_y = u_ * (s * wv_.array()).matrix();
  return f;
}

double CoefficientEvaluator::f(double t) const {
  const auto c = site0(t);
  return c.pi_x * c.pi_x + c.delta_x * c.delta_x;
}

double CoefficientEvaluator::df(double t) const {
  const auto c = site0(t);
  return 2.0 * (c.pi_x * c.d_pi_x + c.delta_x * c.d_delta_x);
}

CoefficientSet coefficients(const AdjacencyDecomposition& decomp,
                            const std::vector<double>& times) {
  if (times.empty()) throw std::invalid_argument("coefficients: empty grid");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw std::invalid_argument("coefficients: grid not strictly increasing");

  const int m = static_cast<int>(decomp.lambda.size());
  const int nt = static_cast<int>(times.size());
  CoefficientSet set;
  set.times = Eigen::Map<const Eigen::VectorXd>(times.data(), nt);
  for (Eigen::MatrixXd* p : {&set.pi_x, &set.delta_x, &set.pi_y, &set.delta_y,
                             &set.d_pi_x, &set.d_delta_x, &set.d_pi_y,
                             &set.d_delta_y})
    p->resize(m, nt);

  const Eigen::VectorXd wu = decomp.u.row(0).transpose();
  const Eigen::VectorXd wv = decomp.v.row(0).transpose();
  for (int k = 0; k < nt; ++k) {
    const Eigen::ArrayXd lc = (decomp.lambda.array() * times[static_cast<std::size_t>(k)]).cos();
    const Eigen::ArrayXd ls = (decomp.lambda.array() * times[static_cast<std::size_t>(k)]).sin();
    const Eigen::ArrayXd lam = decomp.lambda.array();
    set.pi_x.col(k) = decomp.u * (lc * wu.array()).matrix();
    set.delta_x.col(k) = decomp.v * (ls * wu.array()).matrix();
    set.pi_y.col(k) = decomp.v * (lc * wv.array()).matrix();
    set.delta_y.col(k) = decomp.u * (ls * wv.array()).matrix();
    set.d_pi_x.col(k) = decomp.u * (-lam * ls * wu.array()).matrix();
    set.d_delta_x.col(k) = decomp.v * (lam * lc * wu.array()).matrix();
    set.d_pi_y.col(k) = decomp.v * (-lam * ls * wv.array()).matrix();
    set.d_delta_y.col(k) = decomp.u * (lam * lc * wv.array()).matrix();
  }
  return set;
}

double coefficient_series_check(const AdjacencyDecomposition& decomp, double t,
                                int order) {
  const int m = static_cast<int>(decomp.lambda.size());
  Eigen::VectorXd e0 = Eigen::VectorXd::Zero(m);
  e0(0) = 1.0;

  // Truncated Eq.-(4)/(5)-style series, built by iterating tau tau^T.
  Eigen::VectorXd cur = e0;
  Eigen::VectorXd pix = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd dex = Eigen::VectorXd::Zero(m);
  double even_fac = 1.0;  // t^(2p) / (2p)!
  for (int p = 0; p <= order; ++p) {
    if (p > 0) {
      even_fac *= t * t / ((2.0 * p - 1.0) * (2.0 * p));
      cur = decomp.tau * (decomp.tau.transpose() * cur);
    }
    const double sign = (p % 2 == 0) ? 1.0 : -1.0;
    const double odd_fac = even_fac * t / (2.0 * p + 1.0);
    if (!std::isfinite(even_fac * cur.norm()))
      throw std::runtime_error("coefficient_series_check: term overflow");
    pix += sign * even_fac * cur;
    dex += sign * odd_fac * (decomp.tau.transpose() * cur);
  }

  const Eigen::ArrayXd lc = (decomp.lambda.array() * t).cos();
  const Eigen::ArrayXd ls = (decomp.lambda.array() * t).sin();
  const Eigen::VectorXd wu = decomp.u.row(0).transpose();
  const Eigen::VectorXd pix_sum = decomp.u * (lc * wu.array()).matrix();
  const Eigen::VectorXd dex_sum = decomp.v * (ls * wu.array()).matrix();

  return std::max((pix - pix_sum).cwiseAbs().maxCoeff(),
                  (dex - dex_sum).cwiseAbs().maxCoeff());
}

std::vector<double> time_grid(double t_max, double dt) {
  if (!(dt > 0) || !(t_max >= 0))
    throw std::invalid_argument("time_grid: bad parameters");
  std::vector<double> ts;
  const int n = static_cast<int>(std::floor(t_max / dt + 1e-9));
  ts.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) ts.push_back(k * dt);
  return ts;
}

}  // namespace spinchain
