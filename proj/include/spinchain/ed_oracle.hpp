#pragma once

#include <Eigen/Dense>
#include <vector>

#include "spinchain/chain_spec.hpp"
#include "spinchain/qubit.hpp"

namespace spinchain {

enum class ChainStateLabel { ground_state, all_up };

// Exact unitary evolution of qubit + chain in the full 2^(N+1) Hilbert
// space, reduced to the qubit at each time. Test oracle for the dynamical
// map; refuses N > 10. The ground-state label diagonalizes H_Gamma fully;
// callers should avoid parameter points with a degenerate chain ground
// state (zero-energy fermion modes).
std::vector<QubitState> ed_oracle_evolve(const ChainSpec& spec,
                                         const QubitState& qubit,
                                         ChainStateLabel chain_state,
                                         const std::vector<double>& times);

// Ground-state diagnostics used by correlator tests.
struct EdChainGroundState {
  Eigen::VectorXd amplitudes;  // 2^N real amplitudes
  double energy = 0.0;
  double gap = 0.0;
};
EdChainGroundState ed_chain_ground_state(int n_sites, double j, double h);

// <sigma^z_n> for n = 1..N in the ED ground state.
Eigen::VectorXd ed_ground_sigma_z(int n_sites, double j, double h);

// String correlator <sigma^x_n (prod_{n<i<m} sigma^z_i) sigma^x_m> in the
// ED ground state; equals twice the closed-form g_nm table.
double ed_string_xx(int n_sites, double j, double h, int n, int m);

}  // namespace spinchain
