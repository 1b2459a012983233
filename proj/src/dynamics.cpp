#include "spinchain/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "spinchain/util.hpp"

namespace spinchain {

MapSnapshot make_snapshot(double t, double pi0, double delta0, double g) {
  MapSnapshot s;
  s.t = t;
  s.f = pi0 * pi0 + delta0 * delta0;
  s.g = g;
  s.gain_to_00 = 0.5 * (1.0 - s.f + g);
  s.gain_to_11 = 0.5 * (1.0 - s.f - g);
  s.a0101 = {pi0, -delta0};

  const double tol = 1e-8;
  if (s.f < -tol || s.f > 1.0 + tol || s.gain_to_00 < -tol ||
      s.gain_to_00 > 1.0 + tol || s.gain_to_11 < -tol ||
      s.gain_to_11 > 1.0 + tol)
    throw std::runtime_error("make_snapshot: map coefficients out of range "
                             "(upstream coefficient or correlator bug)");
  return s;
}

MapSnapshot snapshot_at(const CoefficientEvaluator& eval,
                        const GroundStateCorrelators& corr, double t) {
  const auto c = eval.site0(t);
  return make_snapshot(t, c.pi_x, c.delta_x, g_at(eval, corr, t));
}

QubitState evolve(const QubitState& in, const MapSnapshot& snap) {
  in.require_physical(1e-8);
  QubitState out;
  out.rho00 = snap.f * in.rho00 + snap.gain_to_00;
  out.rho01 = snap.a0101 * in.rho01;
  out.require_physical(1e-8);
  return out;
}

std::vector<QubitState> trajectory(const QubitState& in,
                                   const CoefficientEvaluator& eval,
                                   const GroundStateCorrelators& corr,
                                   const std::vector<double>& times) {
  std::vector<QubitState> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(evolve(in, snapshot_at(eval, corr, t)));
  return out;
}

std::string dump_trajectory(const QubitState& in,
                            const CoefficientEvaluator& eval,
                            const GroundStateCorrelators& corr,
                            const std::vector<double>& times,
                            const std::string& path) {
  CsvWriter csv(path, "t,rho00,re_rho01,im_rho01,rx,ry,rz");
  for (double t : times) {
    const QubitState s = evolve(in, snapshot_at(eval, corr, t));
    const auto r = s.bloch();
    csv.row({t, s.rho00, s.rho01.real(), s.rho01.imag(), r[0], r[1], r[2]});
  }
  return path;
}

double evolved_pair_distance(double f, const PairDifference& pd) {
  const double c2 = std::norm(pd.c);
  return std::sqrt(std::max(0.0, (pd.p * pd.p * f + c2) * f));
}

double zeta_xy(const SiteZeroCoefficients& c, const std::array<double, 3>& dr) {
  const double a = c.pi_x * c.pi_y + c.delta_x * c.delta_y;
  const double b = c.pi_x * dr[0] + c.delta_x * dr[1];
  const double d = c.pi_y * dr[1] - c.delta_y * dr[0];
  return a * a * dr[2] * dr[2] + b * b + d * d;
}

double flux_xy(const SiteZeroCoefficients& c, const std::array<double, 3>& dr) {
  const double a = c.pi_x * c.pi_y + c.delta_x * c.delta_y;
  const double da = c.d_pi_x * c.pi_y + c.pi_x * c.d_pi_y +
                    c.d_delta_x * c.delta_y + c.delta_x * c.d_delta_y;
  const double b = c.pi_x * dr[0] + c.delta_x * dr[1];
  const double db = c.d_pi_x * dr[0] + c.d_delta_x * dr[1];
  const double e = c.pi_y * dr[1] - c.delta_y * dr[0];
  const double de = c.d_pi_y * dr[1] - c.d_delta_y * dr[0];
  const double num = dr[2] * dr[2] * a * da + b * db + e * de;
  const double zeta = zeta_xy(c, dr);
  if (zeta <= 0.0) {
    if (num == 0.0) return 0.0;
    return num > 0 ? HUGE_VAL : -HUGE_VAL;
  }
  return num / std::sqrt(zeta);
}

}  // namespace spinchain
