#include <doctest.h>

#include <cmath>

#include "spinchain/spectral.hpp"

using namespace spinchain;

TEST_CASE("parabola rule classification") {
  CHECK(classify_localization(0.0, 1.0).count == 0);
  CHECK_FALSE(classify_localization(0.0, 1.0).boundary);
  CHECK(classify_localization(0.5, 1.0).boundary);
  CHECK(classify_localization(0.0, 1.5).count == 2);
  CHECK(classify_localization(0.8, 1.0).count == 1);
  CHECK(classify_localization(-0.8, 1.0).count == 1);
  CHECK(classify_localization(0.0, std::sqrt(2.0)).boundary);
  CHECK_THROWS_AS(classify_localization(std::nan(""), 1.0),
                  std::invalid_argument);
}

TEST_CASE("numeric level counting at N = 400") {
  SUBCASE("homogeneous chain: no out-of-band level") {
    const auto rep = numeric_localized_levels(
        ChainSpec::uniform(400, 1.0, 1.0, 0.0, 0.0));
    CHECK(rep.numeric_count == 0);
    CHECK(rep.analytic_count == 0);
  }
  SUBCASE("strong qubit coupling: two levels localized at the boundary pair") {
    const auto rep = numeric_localized_levels(
        ChainSpec::uniform(400, 1.0, 1.5, 0.0, 0.0));
    CHECK(rep.numeric_count == 2);
    CHECK(rep.analytic_count == 2);
    for (double ipr : rep.ipr) CHECK(ipr > 0.05);  // localized, not 1/N
  }
  SUBCASE("field detuning past the parabola: one level") {
    const auto rep = numeric_localized_levels(
        ChainSpec::uniform(400, 1.0, 1.0, 0.8, 0.0));
    CHECK(rep.numeric_count == 1);
    CHECK(rep.analytic_count == 1);
  }
}

TEST_CASE("analytic and numeric counts agree on a coarse parameter scan") {
  for (double j0 : {0.6, 1.0, 1.3416407864998738}) {
    for (double h : {0.0, 0.2, 0.8, 1.2}) {
      const double p = 1.0 - 0.5 * j0 * j0;
      if (std::min(std::abs(h - p), std::abs(h + p)) < 0.1) continue;
      const auto rep =
          numeric_localized_levels(ChainSpec::uniform(400, 1.0, j0, h, 0.0));
      CAPTURE(h);
      CAPTURE(j0);
      CHECK(rep.numeric_count == rep.analytic_count);
    }
  }
}

TEST_CASE("excitation distribution bookkeeping") {
  const auto spec = ChainSpec::uniform(49, 1.0, 1.0, 0.5, 0.0);
  SUBCASE("equatorial qubit: sum rule k_F + 1/2") {
    const auto d = excitation_distribution(spec, 0.5);
    CHECK(d.occupations.sum() ==
          doctest::Approx(d.k_fermi + 0.5).epsilon(1e-10));
    for (int i = 0; i < d.occupations.size(); ++i) {
      CHECK(d.occupations(i) >= -1e-12);
      CHECK(d.occupations(i) <= 1.0 + 1e-12);
    }
  }
  SUBCASE("qubit in |0> (spin up, empty site): sum rule k_F") {
    const auto d = excitation_distribution(spec, 0.0);
    CHECK(d.occupations.sum() == doctest::Approx(d.k_fermi).epsilon(1e-10));
  }
  SUBCASE("qubit in |1> (occupied site): sum rule k_F + 1") {
    const auto d = excitation_distribution(spec, 1.0);
    CHECK(d.occupations.sum() ==
          doctest::Approx(d.k_fermi + 1.0).epsilon(1e-10));
  }
}

TEST_CASE("excitation profile: flat at the markov point, spiked past it") {
  const auto at = [](double h) {
    return excitation_distribution(ChainSpec::uniform(49, 1.0, 1.0, h, 0.0));
  };
  const double flat04 = excitation_flatness(at(0.4));
  const double flat05 = excitation_flatness(at(0.5));
  const double flat06 = excitation_flatness(at(0.6));
  CHECK(flat05 < flat04);
  CHECK(flat05 < flat06);
  CHECK_FALSE(has_out_of_band_spike(at(0.4)));
  CHECK_FALSE(has_out_of_band_spike(at(0.5)));
  CHECK(has_out_of_band_spike(at(0.6)));
}

TEST_CASE("localization length shrinks (IPR grows) deeper past the parabola") {
  double prev_ipr = 0.0;
  for (double h : {0.6, 0.8, 1.2}) {
    const auto rep =
        numeric_localized_levels(ChainSpec::uniform(300, 1.0, 1.0, h, 0.0));
    REQUIRE(rep.numeric_count == 1);
    CHECK(rep.ipr[0] > prev_ipr);
    prev_ipr = rep.ipr[0];
  }
}
