#include "spinchain/adjacency.hpp"

#include <stdexcept>

namespace spinchain {

Eigen::MatrixXd build_tau(const ChainSpec& spec) {
  spec.validate();
  const int m = spec.n_sites + 1;
  Eigen::MatrixXd tau = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    tau(i, i) = -2.0 * spec.fields[static_cast<std::size_t>(i)];
    if (i > 0) tau(i, i - 1) = spec.jx[static_cast<std::size_t>(i - 1)];
    if (i < m - 1) tau(i, i + 1) = spec.jy[static_cast<std::size_t>(i)];
  }
  return tau;
}

AdjacencyDecomposition build_adjacency(const ChainSpec& spec) {
  AdjacencyDecomposition d;
  d.tau = build_tau(spec);
  if (!d.tau.allFinite())
    throw std::runtime_error("build_adjacency: non-finite adjacency matrix");
  Eigen::BDCSVD<Eigen::MatrixXd> svd(d.tau,
                                     Eigen::ComputeFullU | Eigen::ComputeFullV);
  d.u = svd.matrixU();
  d.v = svd.matrixV();
  d.lambda = svd.singularValues();
  if (!d.lambda.allFinite())
    throw std::runtime_error("build_adjacency: SVD failed");
  return d;
}

}  // namespace spinchain
