#include "spinchain/channels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinchain {

namespace {

using cd = std::complex<double>;

const Matrix2cd& pauli(int m) {
  static const std::array<Matrix2cd, 4> k = [] {
    std::array<Matrix2cd, 4> a;
    a[0] << 1, 0, 0, 1;
    a[1] << 0, 1, 1, 0;
    a[2] << 0, cd(0, -1), cd(0, 1), 0;
    a[3] << 1, 0, 0, -1;
    return a;
  }();
  return k[static_cast<std::size_t>(m)];
}

// beta tensor in the matrix-unit basis rho_j = {|0><0|, |0><1|, |1><0|,
// |1><1|}: K_m rho_j K_n^+ = sum_k beta^{mn}_{jk} rho_k. Solved once as a
// 16x16 system lambda = B vec(chi).
const Eigen::PartialPivLU<Eigen::Matrix<cd, 16, 16>>& beta_lu() {
  static const auto lu = [] {
    Eigen::Matrix<cd, 16, 16> b;
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        for (int j = 0; j < 4; ++j) {
          Matrix2cd rj = Matrix2cd::Zero();
          rj(j / 2, j % 2) = 1.0;
          const Matrix2cd out = pauli(m) * rj * pauli(n).adjoint();
          for (int k = 0; k < 4; ++k)
            b(j * 4 + k, m * 4 + n) = out(k / 2, k % 2);
        }
    return Eigen::PartialPivLU<Eigen::Matrix<cd, 16, 16>>(b);
  }();
  return lu;
}

void require_physical_probe(const Matrix2cd& rho) {
  if (std::abs(rho(0, 0).imag()) > 1e-8 ||
      std::abs((rho.trace() - 1.0)) > 1e-6 ||
      (rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-6)
    throw std::runtime_error("process_tomography: probe output not a density matrix");
  Eigen::SelfAdjointEigenSolver<Matrix2cd> es(rho);
  if (es.eigenvalues().minCoeff() < -1e-6)
    throw std::runtime_error("process_tomography: probe output has negative eigenvalue");
}

Matrix4cd sqrt_psd(const Matrix4cd& m) {
  Eigen::SelfAdjointEigenSolver<Matrix4cd> es(m);
  Eigen::Vector4d d = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * d.cwiseSqrt().asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace

Matrix2cd to_matrix(const QubitState& s) {
  Matrix2cd m;
  m(0, 0) = s.rho00;
  m(0, 1) = s.rho01;
  m(1, 0) = std::conj(s.rho01);
  m(1, 1) = 1.0 - s.rho00;
  return m;
}

IntermediateMap make_intermediate(const MapSnapshot& at_t,
                                  const MapSnapshot& at_tt1) {
  if (at_t.f == 0.0)
    throw std::runtime_error("make_intermediate: f(t) = 0, singular intermediate map");
  if (at_t.a0101 == cd(0.0, 0.0))
    throw std::runtime_error("make_intermediate: a0101(t) = 0, singular intermediate map");
  IntermediateMap im;
  im.t = at_t.t;
  im.t1 = at_tt1.t - at_t.t;
  im.ratio_f = at_tt1.f / at_t.f;
  im.ratio_coh = at_tt1.a0101 / at_t.a0101;
  im.gain00 = at_tt1.gain_to_00 - im.ratio_f * at_t.gain_to_00;
  im.gain11 = at_tt1.gain_to_11 - im.ratio_f * at_t.gain_to_11;
  return im;
}

QubitState apply_intermediate(const IntermediateMap& im, const QubitState& in) {
  QubitState out;
  out.rho00 = im.ratio_f * in.rho00 + im.gain00;
  out.rho01 = im.ratio_coh * in.rho01;
  return out;
}

double divisibility_C(const IntermediateMap& im, const QubitState& probe) {
  const QubitState out = apply_intermediate(im, probe);
  const double dz = out.rho00 - (1.0 - out.rho00);
  return 4.0 * std::norm(out.rho01) + dz * dz;
}

std::array<double, 4> choi_eigenvalues(const IntermediateMap& im) {
  const double d1 = im.ratio_f + im.gain00;
  const double d4 = im.ratio_f + im.gain11;
  const double d2 = im.gain00;
  const double d3 = im.gain11;
  const double tr = 0.5 * (d1 + d4);
  const double disc =
      std::sqrt(0.25 * (d1 - d4) * (d1 - d4) + std::norm(im.ratio_coh));
  std::array<double, 4> ev = {0.5 * (tr - disc), 0.5 * d2, 0.5 * d3,
                              0.5 * (tr + disc)};
  std::sort(ev.begin(), ev.end());
  return ev;
}

double ChiMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix4cd> es((m + m.adjoint()) / 2.0);
  return es.eigenvalues().minCoeff();
}

double ChiMatrix::hermiticity_error() const {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double ChiMatrix::trace_preservation_error() const {
  Matrix2cd acc = Matrix2cd::Zero();
  for (int mm = 0; mm < 4; ++mm)
    for (int nn = 0; nn < 4; ++nn)
      acc += m(mm, nn) * (pauli(nn).adjoint() * pauli(mm));
  return (acc - Matrix2cd::Identity()).cwiseAbs().maxCoeff();
}

ChiMatrix process_tomography(const Matrix2cd& out0, const Matrix2cd& out1,
                             const Matrix2cd& out_plus,
                             const Matrix2cd& out_plus_y) {
  for (const auto* r : {&out0, &out1, &out_plus, &out_plus_y})
    require_physical_probe(*r);

  // E(|0><1|) from the probe combination identity
  const Matrix2cd e01 =
      out_plus + cd(0, 1) * out_plus_y - cd(0.5, 0.5) * (out0 + out1);
  const Matrix2cd e10 = e01.adjoint();

  Eigen::Matrix<cd, 16, 1> lam;
  const std::array<const Matrix2cd*, 4> images = {&out0, &e01, &e10, &out1};
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) lam(j * 4 + k) = (*images[j])(k / 2, k % 2);

  const Eigen::Matrix<cd, 16, 1> chiv = beta_lu().solve(lam);
  ChiMatrix chi;
  for (int mm = 0; mm < 4; ++mm)
    for (int nn = 0; nn < 4; ++nn) chi.m(mm, nn) = chiv(mm * 4 + nn);
  return chi;
}

ChiMatrix chi_of_channel(
    const std::function<Matrix2cd(const Matrix2cd&)>& ch) {
  Matrix2cd p0, p1, pp, py;
  p0 << 1, 0, 0, 0;
  p1 << 0, 0, 0, 1;
  pp << 0.5, 0.5, 0.5, 0.5;
  py << 0.5, cd(0, -0.5), cd(0, 0.5), 0.5;
  return process_tomography(ch(p0), ch(p1), ch(pp), ch(py));
}

ChiMatrix chi_of_snapshot(const MapSnapshot& snap) {
  return chi_of_channel([&](const Matrix2cd& rho) -> Matrix2cd {
    Matrix2cd out;
    out(0, 0) = snap.f * rho(0, 0).real() + snap.gain_to_00;
    out(1, 1) = 1.0 - out(0, 0).real();
    out(0, 1) = snap.a0101 * rho(0, 1);
    out(1, 0) = std::conj(out(0, 1));
    return out;
  });
}

Matrix2cd apply_chi(const ChiMatrix& chi, const Matrix2cd& rho) {
  Matrix2cd out = Matrix2cd::Zero();
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      out += chi.m(m, n) * (pauli(m) * rho * pauli(n).adjoint());
  return out;
}

double KrausSet::completeness_error() const {
  Matrix2cd acc = Matrix2cd::Zero();
  for (const auto& k : ops) acc += k.adjoint() * k;
  return (acc - Matrix2cd::Identity()).cwiseAbs().maxCoeff();
}

KrausSet kraus_from_chi(const ChiMatrix& chi) {
  if (chi.hermiticity_error() > 1e-8)
    throw std::runtime_error("kraus_from_chi: chi not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix4cd> es((chi.m + chi.m.adjoint()) / 2.0);
  KrausSet set;
  // descending weights
  for (int i = 0; i < 4; ++i) set.weights(i) = es.eigenvalues()(3 - i);
  for (int i = 3; i >= 0; --i) {
    double d = es.eigenvalues()(i);
    if (d < -1e-6)
      throw std::runtime_error("kraus_from_chi: chi eigenvalue below -1e-6, "
                               "map not completely positive");
    if (d <= 0.0) continue;  // clip numerical noise in (-1e-8, 0]
    Matrix2cd k = Matrix2cd::Zero();
    for (int j = 0; j < 4; ++j) k += es.eigenvectors()(j, i) * pauli(j);
    set.ops.push_back(std::sqrt(d) * k);
  }
  return set;
}

QubitState gad_channel(const GadChannelParams& p, const QubitState& in) {
  if (p.mu < 0 || p.gamma < 0 || p.big_gamma < 0)
    throw std::invalid_argument("gad_channel: parameters must be nonnegative");
  const double x = std::exp(-2.0 * p.gamma * (2.0 * p.mu + 1.0));
  const double y =
      std::exp(-(2.0 * p.big_gamma + p.gamma * (2.0 * p.mu + 1.0)));
  QubitState out;
  out.rho00 =
      in.rho00 * x + (p.mu + 1.0) / (2.0 * p.mu + 1.0) * (1.0 - x);
  out.rho01 = in.rho01 * y;
  return out;
}

Matrix2cd gad_channel(const GadChannelParams& p, const Matrix2cd& in) {
  QubitState s{in(0, 0).real(), in(0, 1)};
  const QubitState out = gad_channel(p, s);
  return to_matrix(out);
}

ChiMatrix chi_gad(const GadChannelParams& p) {
  return chi_of_channel(
      [&](const Matrix2cd& rho) { return gad_channel(p, rho); });
}

double process_fidelity(const ChiMatrix& chi1, const ChiMatrix& chi2) {
  const double t1 = chi1.m.trace().real();
  const double t2 = chi2.m.trace().real();
  if (t1 <= 0 || t2 <= 0)
    throw std::runtime_error("process_fidelity: non-positive trace");
  const Matrix4cd a = (chi1.m + chi1.m.adjoint()) / (2.0 * t1);
  const Matrix4cd b = (chi2.m + chi2.m.adjoint()) / (2.0 * t2);
  const Matrix4cd ra = sqrt_psd(a);
  Eigen::SelfAdjointEigenSolver<Matrix4cd> es(ra * b * ra);
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += std::sqrt(std::max(0.0, es.eigenvalues()(i)));
  return s * s;
}

namespace {

constexpr double kBoxHi = 50.0;
constexpr double kBoxLo = 1e-9;

GadChannelParams clamp_params(const Eigen::Vector3d& x) {
  auto c = [](double v) { return std::clamp(std::abs(v), kBoxLo, kBoxHi); };
  return GadChannelParams{c(x(0)), c(x(1)), c(x(2))};
}

// Plain Nelder-Mead on 3 parameters; the objective clamps into the box.
Eigen::Vector3d nelder_mead(const std::function<double(const Eigen::Vector3d&)>& fn,
                            Eigen::Vector3d x0, int max_iter, double ftol) {
  constexpr int n = 3;
  std::array<Eigen::Vector3d, n + 1> pts;
  std::array<double, n + 1> val;
  pts[0] = x0;
  for (int i = 0; i < n; ++i) {
    pts[static_cast<std::size_t>(i) + 1] = x0;
    const double step = x0(i) != 0.0 ? 0.25 * std::abs(x0(i)) : 0.05;
    pts[static_cast<std::size_t>(i) + 1](i) += step;
  }
  for (std::size_t i = 0; i <= n; ++i) val[i] = fn(pts[i]);

  auto order = [&] {
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        if (val[j] < val[i]) {
          std::swap(val[i], val[j]);
          std::swap(pts[i], pts[j]);
        }
  };
  order();
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(val[n] - val[0]) < ftol) break;
    const Eigen::Vector3d centroid = (pts[0] + pts[1] + pts[2]) / 3.0;
    const Eigen::Vector3d refl = centroid + (centroid - pts[n]);
    const double fr = fn(refl);
    if (fr < val[0]) {
      const Eigen::Vector3d exp_ = centroid + 2.0 * (centroid - pts[n]);
      const double fe = fn(exp_);
      pts[n] = fe < fr ? exp_ : refl;
      val[n] = std::min(fe, fr);
    } else if (fr < val[n - 1]) {
      pts[n] = refl;
      val[n] = fr;
    } else {
      const Eigen::Vector3d con = centroid + 0.5 * (pts[n] - centroid);
      const double fc = fn(con);
      if (fc < val[n]) {
        pts[n] = con;
        val[n] = fc;
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          pts[i] = pts[0] + 0.5 * (pts[i] - pts[0]);
          val[i] = fn(pts[i]);
        }
      }
    }
    order();
  }
  return pts[0];
}

}  // namespace

GadFitResult fit_gad(const ChiMatrix& chi, std::uint64_t seed,
                     const GadChannelParams* warm_start) {
  auto objective = [&](const Eigen::Vector3d& x) {
    return -process_fidelity(chi, chi_gad(clamp_params(x)));
  };

  std::vector<Eigen::Vector3d> starts;
  if (warm_start)
    starts.emplace_back(warm_start->mu, warm_start->gamma,
                        warm_start->big_gamma);
  Rng rng(seed);
  for (int i = 0; i < 8; ++i)
    starts.emplace_back(std::pow(10.0, rng.uniform(-1.0, 1.5)),
                        std::pow(10.0, rng.uniform(-2.5, 0.5)),
                        std::pow(10.0, rng.uniform(-2.5, 0.5)));

  GadFitResult best;
  best.fidelity = -1.0;
  for (const auto& s : starts) {
    const Eigen::Vector3d x = nelder_mead(objective, s, 400, 1e-8);
    const GadChannelParams p = clamp_params(x);
    const double fp = process_fidelity(chi, chi_gad(p));
    if (fp > best.fidelity) {
      best.fidelity = fp;
      best.params = p;
    }
  }
  best.converged = best.fidelity >= 0.0;
  return best;
}

}  // namespace spinchain
