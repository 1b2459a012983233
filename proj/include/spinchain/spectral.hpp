#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spinchain/chain_spec.hpp"

namespace spinchain {

// Parabola rule of the (h/J, J0/J) plane (h0 = 0 convention): a level is
// bound above the band iff h/J > p and below iff h/J < -p, with
// p = 1 - (J0/J)^2 / 2.
struct LocalizationClass {
  int count = 0;          // 0, 1 or 2
  bool boundary = false;  // within 1e-9 of a parabola
};
LocalizationClass classify_localization(double h_over_j, double j0_over_j);

struct LocalizationReport {
  int analytic_count = 0;
  int numeric_count = 0;
  bool boundary_flag = false;
  std::vector<double> out_of_band_energies;
  std::vector<double> ipr;  // inverse participation ratios of those states
};

// Diagonalizes the (N+1)-site single-particle matrix (-tau) and counts
// eigenvalues outside the bulk band [2h - 2J, 2h + 2J] widened by 3/N.
LocalizationReport numeric_localized_levels(const ChainSpec& spec);

// Jordan-Wigner excitation content of the product initial state
// (qubit occupation times chain ground sea) in the eigenbasis of the
// single-particle matrix M = -tau. occupations = diag(W^T G W).
//
// Basis note: |0> (spin up) maps to an empty fermion site, so an
// equatorial qubit has site occupation 1/2 and |1> has occupation 1.
struct ExcitationDistribution {
  Eigen::VectorXd energies;     // ascending
  Eigen::VectorXd occupations;  // in [0,1]
  int k_fermi = 0;
  double band_lo = 0.0, band_hi = 0.0;  // nominal bulk band edges
};

ExcitationDistribution excitation_distribution(const ChainSpec& spec,
                                               double qubit_occupation = 0.5);

// Particle/hole excitation numbers relative to the filled Fermi sea:
// 1 - occupation for modes below the chemical potential (energy 0 for
// h0 = 0), occupation above. This is the quantity whose energy profile
// flattens at the Markovianity point.
Eigen::VectorXd excitation_numbers(const ExcitationDistribution& dist);

// Flatness metric: standard deviation of the excitation numbers over
// in-band modes below the chemical potential, excluding the single mode
// nearest to it (the qubit-resonance mode carries ~1/2 occupation at any
// field). Band membership uses a 3 (pi/(N+1))^2 edge tolerance, tight
// enough to resolve the weakly bound level at N+1 = 50.
double excitation_flatness(const ExcitationDistribution& dist);

// True when an out-of-band mode carries an excitation number larger than
// twice the in-band median.
bool has_out_of_band_spike(const ExcitationDistribution& dist);

}  // namespace spinchain
