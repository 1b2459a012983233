#include "spinchain/qubit.hpp"

#include <cmath>
#include <stdexcept>

namespace spinchain {

QubitState QubitState::from_bloch(double rx, double ry, double rz) {
  QubitState s;
  s.rho00 = 0.5 + rz;
  s.rho01 = {rx, -ry};
  return s;
}

std::array<double, 3> QubitState::bloch() const {
  return {rho01.real(), -rho01.imag(), rho00 - 0.5};
}

bool QubitState::is_physical(double tol) const {
  const auto r = bloch();
  const double n2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
  return n2 <= 0.25 + tol;
}

void QubitState::require_physical(double tol) const {
  if (!is_physical(tol))
    throw std::runtime_error("QubitState: Bloch vector exceeds 1/2");
}

double trace_distance(const QubitState& a, const QubitState& b) {
  const auto ra = a.bloch();
  const auto rb = b.bloch();
  const double dx = ra[0] - rb[0], dy = ra[1] - rb[1], dz = ra[2] - rb[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

PairDifference pair_difference(const QubitState& a, const QubitState& b) {
  // rho11 = 1 - rho00, so p = rho00^(2) - rho00^(1)
  return {b.rho00 - a.rho00, a.rho01 - b.rho01};
}

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

QubitState random_pure_state(Rng& rng) {
  const double z = 1.0 - 2.0 * rng.uniform();
  const double phi = 2.0 * M_PI * rng.uniform();
  const double st = std::sqrt(std::max(0.0, 1.0 - z * z));
  return QubitState::from_bloch(0.5 * st * std::cos(phi),
                                0.5 * st * std::sin(phi), 0.5 * z);
}

}  // namespace spinchain
