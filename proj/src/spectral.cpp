#include "spinchain/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spinchain/adjacency.hpp"
#include "spinchain/chain_state.hpp"

namespace spinchain {

LocalizationClass classify_localization(double h_over_j, double j0_over_j) {
  if (!std::isfinite(h_over_j) || !std::isfinite(j0_over_j))
    throw std::invalid_argument("classify_localization: non-finite input");
  const double p = 1.0 - 0.5 * j0_over_j * j0_over_j;
  LocalizationClass c;
  c.boundary = std::abs(h_over_j - p) < 1e-9 || std::abs(h_over_j + p) < 1e-9;
  c.count = (h_over_j > p ? 1 : 0) + (h_over_j < -p ? 1 : 0);
  return c;
}

namespace {

// Single-particle matrix M = -tau; bulk parameters were taken from site N.
Eigen::MatrixXd single_particle_matrix(const ChainSpec& spec) {
  return -build_tau(spec);
}

}  // namespace

LocalizationReport numeric_localized_levels(const ChainSpec& spec) {
  const int n = spec.n_sites;
  const double j = spec.jx.back();
  const double h = spec.fields.back();
  const double h0 = spec.fields.front();

  LocalizationReport rep;
  const auto cls =
      classify_localization((h - h0) / j, spec.jx.front() / j);
  rep.analytic_count = cls.count;
  rep.boundary_flag = cls.boundary;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(single_particle_matrix(spec));
  const double tol = 3.0 / n;
  const double lo = 2.0 * h - 2.0 * j - tol;
  const double hi = 2.0 * h + 2.0 * j + tol;
  for (int i = 0; i <= n; ++i) {
    const double e = es.eigenvalues()(i);
    if (e < lo || e > hi) {
      ++rep.numeric_count;
      rep.out_of_band_energies.push_back(e);
      const Eigen::VectorXd w = es.eigenvectors().col(i);
      rep.ipr.push_back(w.array().pow(4).sum());
    }
  }
  return rep;
}

ExcitationDistribution excitation_distribution(const ChainSpec& spec,
                                               double qubit_occupation) {
  if (!spec.is_xx())
    throw std::invalid_argument("excitation_distribution: XX specs only");
  const int n = spec.n_sites;
  const double j = spec.jx.back();
  const double h = spec.fields.back();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(-build_tau(spec));
  const Eigen::MatrixXd& w = es.eigenvectors();

  ExcitationDistribution dist;
  dist.energies = es.eigenvalues();
  dist.k_fermi = fermi_number(n, h / j);
  dist.band_lo = 2.0 * h - 2.0 * j;
  dist.band_hi = 2.0 * h + 2.0 * j;

  // one-body correlation matrix of the product initial state
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n + 1, n + 1);
  g(0, 0) = qubit_occupation;
  const double np1 = n + 1.0;
  for (int k = 1; k <= dist.k_fermi; ++k) {
    Eigen::VectorXd phi(n);
    for (int s = 1; s <= n; ++s)
      phi(s - 1) = std::sqrt(2.0 / np1) * std::sin(s * k * M_PI / np1);
    g.block(1, 1, n, n) += phi * phi.transpose();
  }
  dist.occupations = (w.transpose() * g * w).diagonal();
  return dist;
}

Eigen::VectorXd excitation_numbers(const ExcitationDistribution& dist) {
  Eigen::VectorXd exc = dist.occupations;
  for (int i = 0; i < exc.size(); ++i)
    if (dist.energies(i) < 0.0) exc(i) = 1.0 - exc(i);
  return exc;
}

namespace {

double edge_tolerance(int modes) {
  const double x = M_PI / modes;
  return 3.0 * x * x;
}

}  // namespace

double excitation_flatness(const ExcitationDistribution& dist) {
  const Eigen::VectorXd exc = excitation_numbers(dist);
  const double tol = edge_tolerance(static_cast<int>(dist.energies.size()));
  // in-band, below the chemical potential, skipping the mode nearest to it
  int nearest = -1;
  double best = HUGE_VAL;
  for (int i = 0; i < exc.size(); ++i) {
    if (std::abs(dist.energies(i)) < best) {
      best = std::abs(dist.energies(i));
      nearest = i;
    }
  }
  std::vector<double> vals;
  for (int i = 0; i < exc.size(); ++i) {
    if (i == nearest) continue;
    if (dist.energies(i) >= 0.0) continue;
    if (dist.energies(i) < dist.band_lo - tol ||
        dist.energies(i) > dist.band_hi + tol)
      continue;
    vals.push_back(exc(i));
  }
  if (vals.size() < 2) return 0.0;
  double mean = 0.0;
  for (double v : vals) mean += v;
  mean /= static_cast<double>(vals.size());
  double var = 0.0;
  for (double v : vals) var += (v - mean) * (v - mean);
  return std::sqrt(var / static_cast<double>(vals.size()));
}

bool has_out_of_band_spike(const ExcitationDistribution& dist) {
  const Eigen::VectorXd exc = excitation_numbers(dist);
  const double tol = edge_tolerance(static_cast<int>(dist.energies.size()));
  std::vector<double> inband;
  double out_max = -1.0;
  for (int i = 0; i < exc.size(); ++i) {
    const bool in = dist.energies(i) >= dist.band_lo - tol &&
                    dist.energies(i) <= dist.band_hi + tol;
    if (in)
      inband.push_back(exc(i));
    else
      out_max = std::max(out_max, exc(i));
  }
  if (out_max < 0.0 || inband.empty()) return false;
  std::nth_element(inband.begin(), inband.begin() + inband.size() / 2,
                   inband.end());
  return out_max > 2.0 * inband[inband.size() / 2];
}

}  // namespace spinchain
