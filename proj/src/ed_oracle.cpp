#include "spinchain/ed_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace spinchain {

namespace {

// Basis: bit b of the index is 0 for |0> (spin up) at site b, counting the
// qubit as the highest bit so index = q * 2^N + chain.

// accumulate -2 J (s^x_a s^x_b + s^y_a s^y_b) = -J (|01><10| + |10><01|)
// acting on sites (a, b) of an L-site register (a, b counted from the
// most significant end).
void add_hopping(Eigen::MatrixXd& h, int l, int a, int b, double j) {
  const int ba = l - 1 - a, bb = l - 1 - b;  // bit positions
  const long dim = 1L << l;
  for (long s = 0; s < dim; ++s) {
    const int va = (s >> ba) & 1, vb = (s >> bb) & 1;
    if (va == vb) continue;
    const long flipped = s ^ (1L << ba) ^ (1L << bb);
    h(flipped, s) += -j;
  }
}

void add_field(Eigen::MatrixXd& h, int l, int a, double field) {
  const int ba = l - 1 - a;
  const long dim = 1L << l;
  for (long s = 0; s < dim; ++s) {
    const int va = (s >> ba) & 1;
    h(s, s) += -field * (va == 0 ? 1.0 : -1.0);  // -2 h s^z = -h sigma^z
  }
}

Eigen::MatrixXd chain_hamiltonian(const ChainSpec& spec) {
  const int n = spec.n_sites;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(1L << n, 1L << n);
  for (int a = 0; a < n - 1; ++a) {
    if (spec.jx[static_cast<std::size_t>(a) + 1] !=
        spec.jy[static_cast<std::size_t>(a) + 1])
      throw std::invalid_argument("ed_oracle: XY chain not supported, XX only");
    add_hopping(h, n, a, a + 1, spec.jx[static_cast<std::size_t>(a) + 1]);
  }
  for (int a = 0; a < n; ++a)
    add_field(h, n, a, spec.fields[static_cast<std::size_t>(a) + 1]);
  return h;
}

Eigen::MatrixXd full_hamiltonian(const ChainSpec& spec) {
  const int l = spec.n_sites + 1;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(1L << l, 1L << l);
  for (int a = 0; a < l - 1; ++a) {
    if (spec.jx[static_cast<std::size_t>(a)] != spec.jy[static_cast<std::size_t>(a)])
      throw std::invalid_argument("ed_oracle: XY chain not supported, XX only");
    add_hopping(h, l, a, a + 1, spec.jx[static_cast<std::size_t>(a)]);
  }
  for (int a = 0; a < l; ++a)
    add_field(h, l, a, spec.fields[static_cast<std::size_t>(a)]);
  return h;
}

}  // namespace

EdChainGroundState ed_chain_ground_state(int n_sites, double j, double h) {
  const ChainSpec spec = ChainSpec::uniform(n_sites, j, j, h, 0.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(chain_hamiltonian(spec));
  EdChainGroundState gs;
  gs.amplitudes = es.eigenvectors().col(0);
  gs.energy = es.eigenvalues()(0);
  gs.gap = es.eigenvalues()(1) - es.eigenvalues()(0);
  return gs;
}

Eigen::VectorXd ed_ground_sigma_z(int n_sites, double j, double h) {
  const EdChainGroundState gs = ed_chain_ground_state(n_sites, j, h);
  Eigen::VectorXd out(n_sites);
  const long dim = 1L << n_sites;
  for (int site = 1; site <= n_sites; ++site) {
    const int bit = n_sites - site;
    double acc = 0.0;
    for (long s = 0; s < dim; ++s) {
      const double w = gs.amplitudes(s) * gs.amplitudes(s);
      acc += w * (((s >> bit) & 1) == 0 ? 1.0 : -1.0);
    }
    out(site - 1) = acc;
  }
  return out;
}

double ed_string_xx(int n_sites, double j, double h, int n, int m) {
  if (!(1 <= n && n < m && m <= n_sites))
    throw std::invalid_argument("ed_string_xx: need 1 <= n < m <= N");
  const EdChainGroundState gs = ed_chain_ground_state(n_sites, j, h);
  const long dim = 1L << n_sites;
  const int bn = n_sites - n, bm = n_sites - m;
  double acc = 0.0;
  for (long s = 0; s < dim; ++s) {
    const long flipped = s ^ (1L << bn) ^ (1L << bm);
    double sign = 1.0;
    for (int site = n + 1; site < m; ++site)
      sign *= ((s >> (n_sites - site)) & 1) == 0 ? 1.0 : -1.0;
    acc += gs.amplitudes(flipped) * sign * gs.amplitudes(s);
  }
  return acc;
}

std::vector<QubitState> ed_oracle_evolve(const ChainSpec& spec,
                                         const QubitState& qubit,
                                         ChainStateLabel chain_state,
                                         const std::vector<double>& times) {
  spec.validate();
  const int n = spec.n_sites;
  if (n > 10)
    throw std::invalid_argument(
        "ed_oracle_evolve: N > 10 refused (Hilbert space too large)");

  const long chain_dim = 1L << n;
  Eigen::VectorXd chain(chain_dim);
  if (chain_state == ChainStateLabel::all_up) {
    chain.setZero();
    chain(0) = 1.0;
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(chain_hamiltonian(spec));
    chain = es.eigenvectors().col(0);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(full_hamiltonian(spec));
  const Eigen::MatrixXd& w = es.eigenvectors();
  const Eigen::VectorXd& e = es.eigenvalues();

  // spectral decomposition of the qubit state: rho_q = sum w_i |psi_i><psi_i|
  Eigen::Matrix2cd rho_q;
  rho_q(0, 0) = qubit.rho00;
  rho_q(0, 1) = qubit.rho01;
  rho_q(1, 0) = std::conj(qubit.rho01);
  rho_q(1, 1) = 1.0 - qubit.rho00;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> qes(rho_q);
  const long dim = chain_dim * 2;

  auto real_times_complex = [&w](const Eigen::VectorXcd& x) -> Eigen::VectorXcd {
    const Eigen::VectorXd re = w * x.real();
    const Eigen::VectorXd im = w * x.imag();
    return re + std::complex<double>(0, 1) * im;
  };
  auto real_t_times_complex = [&w](const Eigen::VectorXcd& x) -> Eigen::VectorXcd {
    const Eigen::VectorXd re = w.transpose() * x.real();
    const Eigen::VectorXd im = w.transpose() * x.imag();
    return re + std::complex<double>(0, 1) * im;
  };

  std::vector<QubitState> out;
  out.reserve(times.size());
  std::vector<Eigen::VectorXcd> modes;  // W^T psi for each qubit eigenvector
  for (int i = 0; i < 2; ++i) {
    Eigen::VectorXcd psi0(dim);
    psi0.head(chain_dim) = qes.eigenvectors()(0, i) * chain;
    psi0.tail(chain_dim) = qes.eigenvectors()(1, i) * chain;
    modes.push_back(real_t_times_complex(psi0));
  }

  for (double t : times) {
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    for (int i = 0; i < 2; ++i) {
      const double weight = qes.eigenvalues()(i);
      if (weight < 1e-15) continue;
      const Eigen::VectorXcd phased =
          (modes[static_cast<std::size_t>(i)].array() *
           ((-std::complex<double>(0, 1) * t) * e.array()).exp())
              .matrix();
      const Eigen::VectorXcd psi_t = real_times_complex(phased);
      // partial trace of |psi><psi| over the chain
      const auto a0 = psi_t.head(chain_dim);
      const auto a1 = psi_t.tail(chain_dim);
      rho(0, 0) += weight * a0.squaredNorm();
      rho(0, 1) += weight * a1.dot(a0);  // sum_c a0(c) conj(a1(c))
      rho(1, 1) += weight * a1.squaredNorm();
    }
    QubitState q;
    q.rho00 = rho(0, 0).real();
    q.rho01 = rho(0, 1);
    out.push_back(q);
  }
  return out;
}

}  // namespace spinchain
