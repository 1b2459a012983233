#pragma once

#include <complex>
#include <vector>

#include "spinchain/chain_state.hpp"
#include "spinchain/qubit.hpp"

namespace spinchain {

// Affine action of the dynamical map Phi(t,0) on a qubit state (XX case):
//   rho00(t) = f rho00(0) + gain_to_00,
//   rho01(t) = a0101 rho01(0),
// with gain_to_00 = (1 - f + g)/2, gain_to_11 = (1 - f - g)/2 and
// a0101 = Pi_0 - i Delta_0 in this basis (|a0101|^2 = f). The names
// gain_to_00/gain_to_11 replace the paper-style A superscripts, which are
// too easy to transpose.
struct MapSnapshot {
  double t = 0.0;
  double f = 1.0;
  double g = 0.0;
  double gain_to_00 = 0.0;
  double gain_to_11 = 0.0;
  std::complex<double> a0101{1.0, 0.0};
};

// Builds the snapshot and enforces its invariants (f in [0,1],
// |a0101|^2 = f, gains in [0,1] summing to 1 - f); violations beyond
// 1e-8 signal an upstream bug and throw.
MapSnapshot make_snapshot(double t, double pi0, double delta0, double g);

MapSnapshot snapshot_at(const CoefficientEvaluator& eval,
                        const GroundStateCorrelators& corr, double t);

// Output satisfies the QubitState invariants (throws past 1e-8).
QubitState evolve(const QubitState& in, const MapSnapshot& snap);

std::vector<QubitState> trajectory(const QubitState& in,
                                   const CoefficientEvaluator& eval,
                                   const GroundStateCorrelators& corr,
                                   const std::vector<double>& times);

// Closed-form distance between evolved pairs, XX case:
// D(t) = sqrt((p^2 f + |c|^2) f).
double evolved_pair_distance(double f, const PairDifference& pd);

// CSV dump with columns t,rho00,re_rho01,im_rho01,rx,ry,rz.
std::string dump_trajectory(const QubitState& in,
                            const CoefficientEvaluator& eval,
                            const GroundStateCorrelators& corr,
                            const std::vector<double>& times,
                            const std::string& path);

// General-XY squared distance (zeta) between evolved pairs and the
// corresponding flux numerator A dA + B dB + C dC (times (dr^z)^2 on the
// A term); dr is the half-Bloch difference of the *initial* pair.
double zeta_xy(const SiteZeroCoefficients& c, const std::array<double, 3>& dr);
double flux_xy(const SiteZeroCoefficients& c, const std::array<double, 3>& dr);

}  // namespace spinchain
