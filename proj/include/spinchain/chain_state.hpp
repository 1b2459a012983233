#pragma once

#include <Eigen/Dense>

#include "spinchain/coefficients.hpp"

namespace spinchain {

// Ground-state correlators of the uniform XX environment chain.
//
// Fermi convention: after Jordan-Wigner with |up> mapped to an empty
// fermion site, the single-particle energies are eps_k = 2(h - J cos th_k),
// th_k = k pi/(N+1), and the ground state fills eps_k < 0, i.e. the modes
// with cos th_k > h/J. This is the convention that reproduces the exact
// ground state: at h/J >= 1 the sea is empty and every spin points up.
// Modes with |eps_k| < 1e-12 (exact band-edge degeneracies) are excluded.
struct GroundStateCorrelators {
  int n_sites = 0;
  int k_fermi = 0;
  Eigen::VectorXd sigma_z;   // <sigma^z_n>, n = 1..N  (index 0 -> site 1)
  Eigen::MatrixXd g_matrix;  // two-point correlator g_nm, zero diagonal
};

int fermi_number(int n_sites, double h_over_j);

GroundStateCorrelators correlators(int n_sites, double h_over_j);

// Population function of the dynamical map,
//   g(t) = sum_n (Pi_n^2 + Delta_n^2) <sigma^z_n>
//          - 2 sum_{n != m} (Pi_n Pi_m + Delta_n Delta_m) g_nm,
// chain sites only. XX specs only (x and y families coincide).
Eigen::VectorXd g_of_t(const CoefficientSet& coeffs,
                       const GroundStateCorrelators& corr);

double g_at(const CoefficientEvaluator& eval,
            const GroundStateCorrelators& corr, double t);

// Debug dumps: <dir>/correlators_sigma_z.csv with columns site,sigma_z and
// <dir>/correlators_gnm.csv with columns n,m,g_nm (n < m).
std::vector<std::string> dump_correlators(const GroundStateCorrelators& corr,
                                          const std::string& dir);

}  // namespace spinchain
