#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <functional>

#include "spinchain/dynamics.hpp"

namespace spinchain {

using Matrix2cd = Eigen::Matrix2cd;
using Matrix4cd = Eigen::Matrix4cd;

Matrix2cd to_matrix(const QubitState& s);

// Intermediate map Psi(t+t1, t) connecting Phi(t,0) to Phi(t+t1,0):
//   rho00 -> ratio_f rho00 + gain00,   rho01 -> ratio_coh rho01,
// with gain00 = gain_to_00(t+t1) - ratio_f gain_to_00(t) (same for 11).
// Singular when f(t) = 0 or a0101(t) = 0; construction throws naming the
// vanishing denominator.
struct IntermediateMap {
  double t = 0.0, t1 = 0.0;
  double ratio_f = 1.0;
  std::complex<double> ratio_coh{1.0, 0.0};
  double gain00 = 0.0, gain11 = 0.0;
};

IntermediateMap make_intermediate(const MapSnapshot& at_t,
                                  const MapSnapshot& at_t_plus_t1);

// Raw affine action; the output may be unphysical (that is the point of
// the divisibility probe).
QubitState apply_intermediate(const IntermediateMap& im, const QubitState& in);

// C(t,t1) = 4 |rho01|^2 + (rho00 - rho11)^2 of the probe pushed through
// Psi; the map is positive on the probe iff 0 <= C <= 1.
double divisibility_C(const IntermediateMap& im, const QubitState& probe);

// Eigenvalues of the Choi matrix (Psi x I)(|Bell><Bell|), ascending,
// paper's 1/2 normalization (trace 1 for trace-preserving Psi).
std::array<double, 4> choi_eigenvalues(const IntermediateMap& im);

// --- quantum process tomography -------------------------------------------
//
// Fixed operator basis K_m = {I, sigma_x, sigma_y, sigma_z} in that order;
// chi is the 4x4 process matrix with Phi(rho) = sum_{mn} chi_mn K_m rho K_n^+.
// Trace preservation makes Tr chi = 1 in this normalization.

struct ChiMatrix {
  Matrix4cd m;
  double min_eigenvalue() const;
  double hermiticity_error() const;
  // || sum_mn chi_mn K_n^+ K_m - I ||_inf
  double trace_preservation_error() const;
};

// Reconstructs chi from the evolved images of the four probe states
// |0>, |1>, |+>, |+_y> at a common time. Throws if a probe output is
// unphysical beyond 1e-6.
ChiMatrix process_tomography(const Matrix2cd& out0, const Matrix2cd& out1,
                             const Matrix2cd& out_plus,
                             const Matrix2cd& out_plus_y);

// Convenience: chi of an arbitrary single-qubit channel.
ChiMatrix chi_of_channel(const std::function<Matrix2cd(const Matrix2cd&)>& ch);

ChiMatrix chi_of_snapshot(const MapSnapshot& snap);

Matrix2cd apply_chi(const ChiMatrix& chi, const Matrix2cd& rho);

struct KrausSet {
  std::vector<Matrix2cd> ops;       // sqrt(D_i) sum_j U_ji K_j, D_i > 0 kept
  Eigen::Vector4d weights;          // eigenvalues D_i, descending
  double completeness_error() const;  // || sum K^+ K - I ||_inf
};

// Spectral decomposition of chi. Eigenvalues in (-1e-8, 0) are clipped to
// zero (numerical noise); below -1e-6 is a genuine CP violation and throws.
KrausSet kraus_from_chi(const ChiMatrix& chi);

// --- generalized amplitude damping + dephasing reference channel ----------

// Scaled parameters mu = mu~ t, gamma = gamma~ t, big_gamma = Gamma~ t; the
// channel at the evaluation instant depends on them only:
//   rho00 -> rho00 e^{-2 gamma (2 mu + 1)} + (mu+1)/(2mu+1) (1 - e^{...}),
//   rho01 -> rho01 e^{-(2 big_gamma + gamma (2 mu + 1))}.
struct GadChannelParams {
  double mu = 0.0;
  double gamma = 0.0;
  double big_gamma = 0.0;
};

QubitState gad_channel(const GadChannelParams& p, const QubitState& in);
Matrix2cd gad_channel(const GadChannelParams& p, const Matrix2cd& in);
ChiMatrix chi_gad(const GadChannelParams& p);

// Uhlmann process fidelity [Tr sqrt(sqrt(chi1) chi2 sqrt(chi1))]^2, both
// arguments trace-normalized first.
double process_fidelity(const ChiMatrix& chi1, const ChiMatrix& chi2);

struct GadFitResult {
  GadChannelParams params;
  double fidelity = 0.0;
  bool converged = true;
};

// Maximizes process fidelity over (mu, gamma, big_gamma) in (0, 50] with a
// Nelder-Mead simplex, 8 seeded random restarts plus an optional warm start.
GadFitResult fit_gad(const ChiMatrix& chi, std::uint64_t seed = 2024,
                     const GadChannelParams* warm_start = nullptr);

}  // namespace spinchain
