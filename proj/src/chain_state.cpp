#include "spinchain/chain_state.hpp"

#include <cmath>
#include <filesystem>
#include <stdexcept>

#include "spinchain/util.hpp"

namespace spinchain {

int fermi_number(int n_sites, double h_over_j) {
  if (n_sites < 1) throw std::invalid_argument("fermi_number: N >= 1 required");
  int kf = 0;
  for (int k = 1; k <= n_sites; ++k) {
    const double theta = k * M_PI / (n_sites + 1);
    const double eps = 2.0 * (h_over_j - std::cos(theta));
    if (eps < -1e-12) ++kf;  // zero-energy modes stay out of the sea
  }
  return kf;
}

GroundStateCorrelators correlators(int n_sites, double h_over_j) {
  GroundStateCorrelators c;
  c.n_sites = n_sites;
  c.k_fermi = fermi_number(n_sites, h_over_j);
  const int n = n_sites;
  const int kf = c.k_fermi;
  const double np1 = n + 1.0;

  c.sigma_z.resize(n);
  for (int i = 1; i <= n; ++i) {
    const double theta = i * M_PI / np1;
    if (kf == 0) {
      c.sigma_z(i - 1) = 1.0;
    } else {
      c.sigma_z(i - 1) =
          1.0 - 2.0 / np1 *
                    (kf - std::cos((kf + 1) * theta) * std::sin(kf * theta) /
                              std::sin(theta));
    }
  }

  // Christoffel-Darboux closed form; equals sum_{k<=kf} phi_{n,k} phi_{m,k}.
  auto phi = [&](int j, int k) {
    return std::sqrt(2.0 / np1) * std::sin(j * k * M_PI / np1);
  };
  c.g_matrix = Eigen::MatrixXd::Zero(n, n);
  for (int a = 1; a <= n; ++a) {
    const double ca = std::cos(a * M_PI / np1);
    for (int b = a + 1; b <= n; ++b) {
      const double cb = std::cos(b * M_PI / np1);
      const double val = (phi(a, kf + 1) * phi(b, kf) - phi(a, kf) * phi(b, kf + 1)) /
                         (2.0 * (ca - cb));
      c.g_matrix(a - 1, b - 1) = val;
      c.g_matrix(b - 1, a - 1) = val;
    }
  }
  return c;
}

static double g_from_vectors(const Eigen::VectorXd& pi,
                             const Eigen::VectorXd& delta,
                             const GroundStateCorrelators& corr) {
  const int n = corr.n_sites;
  const auto pc = pi.tail(n);
  const auto dc = delta.tail(n);
  const double s1 = ((pc.array().square() + dc.array().square()) *
                     corr.sigma_z.array())
                        .sum();
  const double s2 = pc.dot(corr.g_matrix * pc) + dc.dot(corr.g_matrix * dc);
  return s1 - 2.0 * s2;
}

Eigen::VectorXd g_of_t(const CoefficientSet& coeffs,
                       const GroundStateCorrelators& corr) {
  if (coeffs.pi_x.rows() != corr.n_sites + 1)
    throw std::invalid_argument("g_of_t: coefficient/correlator size mismatch");
  const int nt = static_cast<int>(coeffs.times.size());
  Eigen::VectorXd g(nt);
  for (int k = 0; k < nt; ++k)
    g(k) = g_from_vectors(coeffs.pi_x.col(k), coeffs.delta_x.col(k), corr);
  return g;
}

double g_at(const CoefficientEvaluator& eval,
            const GroundStateCorrelators& corr, double t) {
  if (eval.n_sites() != corr.n_sites)
    throw std::invalid_argument("g_at: coefficient/correlator size mismatch");
  const CoefficientFrame f = eval.frame(t);
  return g_from_vectors(f.pi_x, f.delta_x, corr);
}

std::vector<std::string> dump_correlators(const GroundStateCorrelators& corr,
                                          const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::string sz_path =
      (std::filesystem::path(dir) / "correlators_sigma_z.csv").string();
  CsvWriter sz(sz_path, "site,sigma_z");
  for (int i = 0; i < corr.n_sites; ++i)
    sz.raw_row(std::to_string(i + 1) + "," + CsvWriter::format(corr.sigma_z(i)));
  const std::string g_path =
      (std::filesystem::path(dir) / "correlators_gnm.csv").string();
  CsvWriter gw(g_path, "n,m,g_nm");
  for (int a = 0; a < corr.n_sites; ++a)
    for (int b = a + 1; b < corr.n_sites; ++b)
      gw.raw_row(std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                 CsvWriter::format(corr.g_matrix(a, b)));
  return {sz_path, g_path};
}

}  // namespace spinchain
