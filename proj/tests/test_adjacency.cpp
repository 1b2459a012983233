#include <doctest.h>

#include <Eigen/Dense>

#include "spinchain/adjacency.hpp"
#include "spinchain/qubit.hpp"

using namespace spinchain;

namespace {

ChainSpec random_spec(Rng& rng, int n) {
  ChainSpec s;
  s.n_sites = n;
  for (int i = 0; i < n; ++i) {
    s.jx.push_back(rng.uniform(-1.5, 1.5));
    s.jy.push_back(rng.uniform(-1.5, 1.5));
  }
  for (int i = 0; i <= n; ++i) s.fields.push_back(rng.uniform(-1.0, 1.0));
  return s;
}

}  // namespace

TEST_CASE("tau entries follow the tridiagonal layout") {
  ChainSpec s;
  s.n_sites = 3;
  s.jx = {0.7, 0.9, 1.1};
  s.jy = {0.2, 0.4, 0.6};
  s.fields = {0.1, 0.3, 0.5, 0.7};
  const Eigen::MatrixXd tau = build_tau(s);
  for (int i = 0; i <= 3; ++i) {
    CHECK(tau(i, i) == -2.0 * s.fields[static_cast<std::size_t>(i)]);
    if (i > 0) CHECK(tau(i, i - 1) == s.jx[static_cast<std::size_t>(i) - 1]);
    if (i < 3) CHECK(tau(i, i + 1) == s.jy[static_cast<std::size_t>(i)]);
  }
  CHECK(tau(0, 2) == 0.0);
  CHECK(tau(3, 0) == 0.0);
}

TEST_CASE("two-site examples") {
  SUBCASE("pure hopping") {
    const auto d = build_adjacency(ChainSpec::uniform(1, 1.0, 1.0, 0.0, 0.0));
    CHECK(d.tau(0, 1) == 1.0);
    CHECK(d.tau(1, 0) == 1.0);
    CHECK(d.tau(0, 0) == 0.0);
    CHECK(d.lambda(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.lambda(1) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("pure field") {
    const auto d = build_adjacency(ChainSpec::uniform(1, 1.0, 0.0, 1.0, 1.0));
    CHECK((d.tau + 2.0 * Eigen::MatrixXd::Identity(2, 2)).norm() == 0.0);
    CHECK(d.lambda(0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(d.lambda(1) == doctest::Approx(2.0).epsilon(1e-14));
  }
}

TEST_CASE("singular values match eigenvalue magnitudes for the uniform chain") {
  const auto d = build_adjacency(ChainSpec::uniform(7, 1.0, 1.0, 0.0, 0.0));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(d.tau);
  Eigen::VectorXd mags = es.eigenvalues().cwiseAbs();
  std::sort(mags.data(), mags.data() + mags.size(), std::greater<double>());
  CHECK((mags - d.lambda).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("SVD reconstruction and pairing consistency on random specs") {
  Rng rng(31415);
  for (int trial = 0; trial < 20; ++trial) {
    const auto spec = random_spec(rng, 2 + static_cast<int>(rng.uniform() * 9));
    const auto d = build_adjacency(spec);
    const int m = spec.n_sites + 1;
    CHECK((d.tau - d.u * d.lambda.asDiagonal() * d.v.transpose()).norm() < 1e-10);
    CHECK((d.u * d.u.transpose() - Eigen::MatrixXd::Identity(m, m)).norm() < 1e-10);
    CHECK((d.v * d.v.transpose() - Eigen::MatrixXd::Identity(m, m)).norm() < 1e-10);
    CHECK((d.tau.transpose() * d.u - d.v * d.lambda.asDiagonal()).norm() < 1e-10);
    for (int i = 1; i < m; ++i) CHECK(d.lambda(i) <= d.lambda(i - 1));
  }
}

TEST_CASE("non-finite input is rejected") {
  ChainSpec s = ChainSpec::uniform(2, 1.0, 1.0, 0.0, 0.0);
  s.fields[1] = std::nan("");
  CHECK_THROWS_AS(build_adjacency(s), std::invalid_argument);
}

TEST_CASE("spec helpers") {
  const auto u = ChainSpec::uniform(5, 1.0, 1.3, 0.4, 0.1);
  CHECK(u.is_xx());
  CHECK(u.is_uniform(1.0, 1.3, 0.4, 0.1));
  CHECK_FALSE(u.is_uniform(1.0, 1.0, 0.4, 0.1));
  ChainSpec xy = u;
  xy.jy[2] = 0.9;
  CHECK_FALSE(xy.is_xx());

  const auto round = spec_from_json_text(spec_to_json_text(u));
  CHECK(round.jx == u.jx);
  CHECK(round.fields == u.fields);
  const auto shorthand = spec_from_json_text(
      R"({"uniform": {"N": 5, "J": 1.0, "J0": 1.3, "h": 0.4, "h0": 0.1}})");
  CHECK(shorthand.is_uniform(1.0, 1.3, 0.4, 0.1));
}
