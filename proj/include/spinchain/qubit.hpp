#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>

namespace spinchain {

// Single-qubit state stored as (rho00, rho01); rho10 = conj(rho01),
// rho11 = 1 - rho00. Basis: |0> is the sigma^z = +1 eigenstate. The
// half-Bloch vector r = (<s^x>, <s^y>, <s^z>) has |r| <= 1/2 with
// rho01 = <s^x> - i <s^y> and rho00 = 1/2 + <s^z>.
struct QubitState {
  double rho00 = 1.0;
  std::complex<double> rho01{0.0, 0.0};

  static QubitState from_bloch(double rx, double ry, double rz);
  std::array<double, 3> bloch() const;

  // Hermiticity and unit trace hold by construction; this checks
  // |r| <= 1/2 + tol (positive semidefiniteness for a qubit).
  bool is_physical(double tol = 1e-12) const;
  void require_physical(double tol = 1e-12) const;  // throws otherwise
};

inline QubitState plus_state() { return QubitState{0.5, {0.5, 0.0}}; }
inline QubitState minus_state() { return QubitState{0.5, {-0.5, 0.0}}; }
inline QubitState plus_y_state() { return QubitState{0.5, {0.0, -0.5}}; }

// D = |r1 - r2| on half-Bloch vectors; equals Tr|rho1 - rho2|/2 for qubits.
double trace_distance(const QubitState& a, const QubitState& b);

// Pair-difference scalars entering the trace-distance closed forms:
// p = rho11^(1) - rho11^(2), c = rho01^(1) - rho01^(2).
struct PairDifference {
  double p;
  std::complex<double> c;
};
PairDifference pair_difference(const QubitState& a, const QubitState& b);

// Deterministic RNG wrapper: the raw mt19937_64 stream is mapped to
// doubles explicitly so output bytes do not depend on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);
  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

// Uniform (Haar) random pure state on the Bloch sphere.
QubitState random_pure_state(Rng& rng);

}  // namespace spinchain
