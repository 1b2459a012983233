#include <doctest.h>

#include <cmath>

#include "spinchain/ed_oracle.hpp"

using namespace spinchain;

TEST_CASE("two-spin Rabi: <s0x(t)> = cos(t)/2 with the chain spin up") {
  const auto spec = ChainSpec::uniform(1, 1.0, 1.0, 0.0, 0.0);
  std::vector<double> times{0.0, 0.4, 1.1, 2.7};
  const auto traj =
      ed_oracle_evolve(spec, plus_state(), ChainStateLabel::all_up, times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(traj[i].bloch()[0] ==
          doctest::Approx(0.5 * std::cos(times[i])).epsilon(1e-12));
  }
}

TEST_CASE("t = 0 returns the input state exactly") {
  const auto spec = ChainSpec::uniform(4, 1.0, 1.2, 0.3, 0.1);
  QubitState q;
  q.rho00 = 0.62;
  q.rho01 = {-0.17, 0.22};
  const auto traj =
      ed_oracle_evolve(spec, q, ChainStateLabel::ground_state, {0.0});
  CHECK(std::abs(traj[0].rho00 - q.rho00) < 1e-12);
  CHECK(std::abs(traj[0].rho01 - q.rho01) < 1e-12);
}

TEST_CASE("oversized systems are refused") {
  const auto spec = ChainSpec::uniform(11, 1.0, 1.0, 0.0, 0.0);
  CHECK_THROWS_AS(
      ed_oracle_evolve(spec, plus_state(), ChainStateLabel::all_up, {0.0}),
      std::invalid_argument);
}

TEST_CASE("chain ground state is gapped at the tested points") {
  CHECK(ed_chain_ground_state(6, 1.0, 0.0).gap > 1e-6);
  CHECK(ed_chain_ground_state(6, 1.0, 0.5).gap > 1e-6);
  CHECK(ed_chain_ground_state(6, 1.0, 0.35).gap > 1e-6);
}

TEST_CASE("trace is conserved along the evolved trajectory") {
  const auto spec = ChainSpec::uniform(5, 1.0, 0.9, 0.4, 0.2);
  QubitState q;
  q.rho00 = 0.25;
  q.rho01 = {0.1, 0.3};
  const auto traj = ed_oracle_evolve(spec, q, ChainStateLabel::ground_state,
                                     {0.5, 1.5, 3.5});
  for (const auto& r : traj) {
    CHECK(r.rho00 >= -1e-12);
    CHECK(r.rho00 <= 1.0 + 1e-12);
    r.require_physical(1e-10);
  }
}
