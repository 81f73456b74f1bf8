#include <doctest.h>

#include "gravxs/cross_section.hpp"
#include "support.hpp"

using namespace gravxs;
using gravxs::testing::relDiff;

TEST_CASE("recoil form and energy form agree") {
  RandomSource rng(211);
  const CouplingConfig c;
  for (int i = 0; i < 300; ++i) {
    const KinematicState s = randomState(rng);
    const double recoil = dsigmaRecoilForm(s, c).value;
    const double energy =
        dsigmaEnergyForm(s.E, s.E_prime, s.theta, s.m, s.M, c).value;
    CHECK(relDiff(recoil, energy) <= 1e-9);
    CHECK(recoil > 0.0);
  }
}

TEST_CASE("recoil form is independent of azimuth and scales as G^2") {
  CouplingConfig c;
  const KinematicState a = buildState(5.0, 1.0, 10.0, 1.2, 0.0);
  const KinematicState b = buildState(5.0, 1.0, 10.0, 1.2, 2.5);
  CHECK(relDiff(dsigmaRecoilForm(a, c).value, dsigmaRecoilForm(b, c).value) <=
        1e-14);

  CouplingConfig doubled = c;
  doubled.G *= 2.0;
  CHECK(relDiff(dsigmaRecoilForm(a, doubled).value,
                4.0 * dsigmaRecoilForm(a, c).value) <= 1e-12);
}

TEST_CASE("energy form rejects E' above E") {
  CHECK_THROWS_AS(dsigmaEnergyForm(5.0, 5.1, 1.0, 1.0, 10.0, CouplingConfig{}),
                  std::domain_error);
}

TEST_CASE("Mott-like limit values") {
  CouplingConfig c;  // G = 1, g^2 = 4pi
  CHECK(mottLikeLimit(1.0, M_PI, 1.0, c).value == 0.0);
  CHECK(relDiff(mottLikeLimit(0.5, M_PI, 1.0, c).value, 3.0) <= 1e-14);
  // beta -> 0 recovers Rutherford
  const double mott = mottLikeLimit(1e-3, 1.0, 2.0, c).value;
  const double ruth = rutherfordLimit(1e-3, 1.0, 2.0, c.G).value;
  CHECK(relDiff(mott, ruth) <= 1e-6);
  CHECK_THROWS_AS(mottLikeLimit(0.0, 1.0, 1.0, c), std::domain_error);
  CHECK_THROWS_AS(mottLikeLimit(1.5, 1.0, 1.0, c), std::domain_error);
  CHECK_THROWS_AS(mottLikeLimit(0.5, 0.0, 1.0, c), std::domain_error);
}

TEST_CASE("Rutherford limit values") {
  CHECK(relDiff(rutherfordLimit(0.5, M_PI, 1.0, 1.0).value, 4.0) <= 1e-14);
  // 1/v^4 power law
  const double at_v = rutherfordLimit(0.4, 1.0, 3.0, 1.0).value;
  const double at_half_v = rutherfordLimit(0.2, 1.0, 3.0, 1.0).value;
  CHECK(relDiff(at_half_v, 16.0 * at_v) <= 1e-12);
  CHECK_THROWS_AS(rutherfordLimit(0.5, 0.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(rutherfordLimit(1.0, 1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("ultra-relativistic limit") {
  CouplingConfig c;
  SUBCASE("E/M -> 0 recovers the Mott-like limit at beta = 1") {
    const double M = 1.0, E = 1e-5 * M, theta = 1.1;
    const double ur = ultrarelativisticLimit(E, theta, M, c).value;
    const double mott1 = mottLikeLimit(1.0, theta, M, c).value;
    CHECK(relDiff(ur, mott1) <= 1e-4);
  }
  SUBCASE("backscattering vanishes for a heavy scatterer") {
    const double M = 1.0, E = 1e-5 * M;
    const double ur = ultrarelativisticLimit(E, M_PI, M, c).value;
    CHECK(ur <= 1e-9 * M * M);
  }
  SUBCASE("matches the full formula for a light beam") {
    const double E = 1.0, m = 1e-5, M = 2.0, theta = M_PI / 2.0;
    const double e_prime = scatteredEnergy(E, m, M, theta);
    const double full = dsigmaEnergyForm(E, e_prime, theta, m, M, c).value;
    const double ur = ultrarelativisticLimit(E, theta, M, c).value;
    CHECK(relDiff(full, ur) <= 1e-3);
  }
  CHECK_THROWS_AS(ultrarelativisticLimit(1.0, 0.0, 1.0, c), std::domain_error);
}

TEST_CASE("heavy-scatterer convergence point") {
  CouplingConfig c;
  const double m = 1.0, beta = 0.5;
  const double E = m / std::sqrt(1.0 - beta * beta);
  const double M = E / 1e-5, theta = M_PI / 2.0;
  const double e_prime = scatteredEnergy(E, m, M, theta);
  const double full = dsigmaEnergyForm(E, e_prime, theta, m, M, c).value;
  const double mott = mottLikeLimit(beta, theta, M, c).value;
  CHECK(std::abs(full / mott - 1.0) <= 1e-3);
}

TEST_CASE("limit-chain deviations shrink at the documented rates") {
  CouplingConfig c;
  SUBCASE("full -> Mott deviation is proportional to E/M") {
    const double m = 1.0, beta = 0.5, theta = 1.3;
    const double E = m / std::sqrt(1.0 - beta * beta);
    double previous = 0.0;
    for (double eom : {1e-2, 1e-3, 1e-4}) {
      const double M = E / eom;
      const double e_prime = scatteredEnergy(E, m, M, theta);
      const double full = dsigmaEnergyForm(E, e_prime, theta, m, M, c).value;
      const double dev =
          std::abs(full / mottLikeLimit(beta, theta, M, c).value - 1.0);
      if (previous > 0.0) {
        CHECK(previous / dev >= 5.0);
        CHECK(previous / dev <= 20.0);
      }
      previous = dev;
    }
  }
  SUBCASE("Mott -> Rutherford deviation is proportional to beta^2") {
    const double theta = 1.3, M = 2.0;
    double previous = 0.0;
    for (double beta : {1e-1, 1e-2, 1e-3}) {
      const double dev = std::abs(mottLikeLimit(beta, theta, M, c).value /
                                      rutherfordLimit(beta, theta, M, c.G).value -
                                  1.0);
      if (previous > 0.0) {
        CHECK(previous / dev >= 50.0);
        CHECK(previous / dev <= 200.0);
      }
      previous = dev;
    }
  }
}

TEST_CASE("angular quadrature") {
  CouplingConfig c;
  SUBCASE("invalid grids are rejected") {
    CHECK_THROWS_AS(
        integratedCrossSection(5.0, 1.0, 10.0, {0.0, M_PI, 100}, c),
        std::domain_error);
    CHECK_THROWS_AS(
        integratedCrossSection(5.0, 1.0, 10.0, {1.0, 0.5, 100}, c),
        std::domain_error);
  }

  SUBCASE("self-convergence under node doubling") {
    const AngularGrid g1{M_PI / 12.0, M_PI, 10001, GridSpacing::UniformTheta};
    const AngularGrid g2{M_PI / 12.0, M_PI, 20001, GridSpacing::UniformTheta};
    const double s1 = integratedCrossSection(5.0, 1.0, 10.0, g1, c);
    const double s2 = integratedCrossSection(5.0, 1.0, 10.0, g2, c);
    CHECK(relDiff(s1, s2) <= 1e-6);
  }

  SUBCASE("uniform-theta and uniform-cos-theta spacings agree") {
    const AngularGrid gt{M_PI / 6.0, M_PI, 4001, GridSpacing::UniformTheta};
    const AngularGrid gc{M_PI / 6.0, M_PI, 4001, GridSpacing::UniformCosTheta};
    const double st = integratedCrossSection(5.0, 1.0, 10.0, gt, c);
    const double sc = integratedCrossSection(5.0, 1.0, 10.0, gc, c);
    CHECK(relDiff(st, sc) <= 1e-8);
  }

  SUBCASE("matches the closed Rutherford antiderivative") {
    // sigma = pi G^2 M^2 / v^4 (1/sin^2(tmin/2) - 1/sin^2(tmax/2))
    const double v = 0.37, M = 2.5, G = 1.0;
    const double tmin = M_PI / 6.0, tmax = M_PI;
    const AngularGrid grid{tmin, M_PI, 10001, GridSpacing::UniformTheta};
    const double numeric = integrateAngular(
        [&](double theta) { return rutherfordLimit(v, theta, M, G).value; },
        grid);
    const double s_min = std::sin(0.5 * tmin), s_max = std::sin(0.5 * tmax);
    const double analytic = M_PI * G * G * M * M / (v * v * v * v) *
                            (1.0 / (s_min * s_min) - 1.0 / (s_max * s_max));
    CHECK(relDiff(numeric, analytic) <= 1e-6);
  }

  SUBCASE("integral grows as the forward cutoff shrinks") {
    const double a = integratedCrossSection(
        5.0, 1.0, 10.0, {M_PI / 4.0, M_PI, 2001, GridSpacing::UniformTheta}, c);
    const double b = integratedCrossSection(
        5.0, 1.0, 10.0, {M_PI / 8.0, M_PI, 2001, GridSpacing::UniformTheta}, c);
    CHECK(b > a);
  }
}
