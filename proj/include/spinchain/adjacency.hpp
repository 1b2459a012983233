#pragma once

#include <Eigen/Dense>

#include "spinchain/chain_spec.hpp"

namespace spinchain {

// Singular value decomposition tau = U diag(lambda) V^T of the tridiagonal
// adjacency matrix. A single SVD keeps the (U, lambda, V) triple sign
// consistent, so tau^T U = V diag(lambda) holds exactly; separate
// eigendecompositions of tau tau^T and tau^T tau would not guarantee that.
struct AdjacencyDecomposition {
  Eigen::MatrixXd tau;      // (N+1) x (N+1)
  Eigen::MatrixXd u;
  Eigen::MatrixXd v;
  Eigen::VectorXd lambda;   // singular values, descending, zeros kept
};

// tau_{i,i-1} = jx[i-1], tau_{i,i+1} = jy[i], tau_{ii} = -2 h_i.
Eigen::MatrixXd build_tau(const ChainSpec& spec);

AdjacencyDecomposition build_adjacency(const ChainSpec& spec);

}  // namespace spinchain
