#include "spinchain/bessel_refs.hpp"

#include <cmath>

namespace spinchain {

double bessel_j(int order, double x) {
  if (x < 0) {
    // cyl_bessel_j needs x >= 0; J_n(-x) = (-1)^n J_n(x)
    const double v = std::cyl_bessel_j(static_cast<double>(order), -x);
    return (order % 2 == 0) ? v : -v;
  }
  return std::cyl_bessel_j(static_cast<double>(order), x);
}

double pi0_equal_fields(double t, double h) {
  if (t == 0.0) return 1.0;
  return bessel_j(1, 2 * t) * std::cos(2 * h * t) / t;
}

double delta0_equal_fields(double t, double h) {
  if (t == 0.0) return 0.0;
  return -bessel_j(1, 2 * t) * std::sin(2 * h * t) / t;
}

double pi_n_markov(int n, double t) {
  const double jn = bessel_j(n, 2 * t);
  const double jn1 = bessel_j(n + 1, 2 * t);
  if (n % 2 == 0) {
    const double sgn = (n / 2) % 2 == 0 ? 1.0 : -1.0;
    return sgn * (std::sin(t) * jn1 + std::cos(t) * jn);
  }
  const double sgn = ((n + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  return sgn * (std::cos(t) * jn1 - std::sin(t) * jn);
}

double delta_n_markov(int n, double t) {
  const double jn = bessel_j(n, 2 * t);
  const double jn1 = bessel_j(n + 1, 2 * t);
  if (n % 2 == 0) {
    const double sgn = (n / 2) % 2 == 0 ? 1.0 : -1.0;
    return sgn * (std::cos(t) * jn1 - std::sin(t) * jn);
  }
  const double sgn = ((n + 3) / 2) % 2 == 0 ? 1.0 : -1.0;
  return sgn * (std::sin(t) * jn1 + std::cos(t) * jn);
}

double pi0_sqrt2(double t) { return bessel_j(0, 2 * t); }

double f_markov(double t) {
  const double j0 = bessel_j(0, 2 * t);
  const double j1 = bessel_j(1, 2 * t);
  return j0 * j0 + j1 * j1;
}

double f_equal_fields(double t) {
  if (t == 0.0) return 1.0;
  const double j1 = bessel_j(1, 2 * t);
  return j1 * j1 / (t * t);
}

}  // namespace spinchain
