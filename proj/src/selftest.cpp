#include "gravxs/selftest.hpp"

#include <cmath>
#include <cstdio>

#include "gravxs/amplitude.hpp"
#include "gravxs/cross_section.hpp"
#include "gravxs/dirac.hpp"
#include "gravxs/random_states.hpp"

namespace gravxs {

namespace {

FourVector randomOnShell(RandomSource& rng, double m, double pmax) {
  const double pmag = rng.logUniform(1e-3 * m, pmax);
  const double ct = rng.uniform(-1.0, 1.0);
  const double st = std::sqrt(1.0 - ct * ct);
  const double ph = rng.uniform(0.0, 2.0 * M_PI);
  FourVector p;
  p[0] = std::sqrt(m * m + pmag * pmag);
  p[1] = pmag * st * std::cos(ph);
  p[2] = pmag * st * std::sin(ph);
  p[3] = pmag * ct;
  return p;
}

double cliffordDeviation() {
  double worst = 0.0;
  for (GammaBasis basis : {GammaBasis::Dirac, GammaBasis::Chiral}) {
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) {
        const Matrix4c anti = gammaMatrix(mu, basis) * gammaMatrix(nu, basis) +
                              gammaMatrix(nu, basis) * gammaMatrix(mu, basis);
        const Matrix4c expected =
            2.0 * minkowskiMetric()(mu, nu) * Matrix4c::Identity();
        worst = std::max(worst, (anti - expected).cwiseAbs().maxCoeff());
      }
    }
  }
  return worst;
}

double diracEquationDeviation(RandomSource& rng, int n) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double m = rng.logUniform(0.1, 100.0);
    const FourVector p = randomOnShell(rng, m, 1e3 * m);
    for (Spin s : kSpins) {
      const Spinor u = diracSpinor(p, m, s);
      const Spinor res = feynmanSlash(p) * u - m * u;
      worst = std::max(worst, res.norm() / (m * u.norm()));
    }
  }
  return worst;
}

double completenessDeviation(RandomSource& rng, int n) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double m = rng.logUniform(0.1, 100.0);
    const FourVector p = randomOnShell(rng, m, 1e3 * m);
    Matrix4c outer = Matrix4c::Zero();
    for (Spin s : kSpins) {
      const Spinor u = diracSpinor(p, m, s);
      outer += u * adjointSpinor(u);
    }
    const Matrix4c proj = energyProjector(p, m);
    const double scale = std::max(1.0, proj.cwiseAbs().maxCoeff());
    worst = std::max(worst, (outer - proj).cwiseAbs().maxCoeff() / scale);
  }
  return worst;
}

double currentConservationDeviation(RandomSource& rng, int n) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double m = rng.logUniform(0.1, 100.0);
    const FourVector p_i = randomOnShell(rng, m, 1e3 * m);
    const FourVector p_f = randomOnShell(rng, m, 1e3 * m);
    for (Spin si : kSpins) {
      for (Spin sf : kSpins) {
        const CurrentVector j = bilinearCurrent(diracSpinor(p_f, m, sf),
                                                diracSpinor(p_i, m, si));
        const FourVector q = lowerIndex(p_f - p_i);
        const Complex div = q[0] * j[0] + q[1] * j[1] + q[2] * j[2] + q[3] * j[3];
        worst = std::max(worst, std::abs(div) / (p_f[0] + p_i[0]));
      }
    }
  }
  return worst;
}

double traceVsBruteDeviation(RandomSource& rng, int n) {
  const CouplingConfig c;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const KinematicState s = randomState(rng);
    const double tr = spinAveragedMsqTrace(s, c);
    const double bf = spinAveragedMsqBruteForce(s, c);
    worst = std::max(worst, std::abs(tr - bf) / tr);
  }
  return worst;
}

double xsecEquivalenceDeviation(RandomSource& rng, int n) {
  const CouplingConfig c;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const KinematicState s = randomState(rng);
    const double recoil = dsigmaRecoilForm(s, c).value;
    const double energy =
        dsigmaEnergyForm(s.E, s.E_prime, s.theta, s.m, s.M, c).value;
    worst = std::max(worst, std::abs(recoil - energy) / energy);
  }
  return worst;
}

double boostInvarianceDeviation(RandomSource& rng, int n) {
  const CouplingConfig c;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const KinematicState s = randomState(rng);
    const double ct = rng.uniform(-1.0, 1.0);
    const double st = std::sqrt(1.0 - ct * ct);
    const double ph = rng.uniform(0.0, 2.0 * M_PI);
    const Vector3 v = 0.9 * Vector3(st * std::cos(ph), st * std::sin(ph), ct);
    const auto boosted = lorentzBoost(s, v);
    const double before = spinAveragedMsqTrace(s, c);
    const double after = spinAveragedMsqTrace(boosted[0], boosted[1],
                                              boosted[2], boosted[3], s.m, s.M, c);
    worst = std::max(worst, std::abs(after - before) / before);
  }
  return worst;
}

double closureDeviation(RandomSource& rng, int n) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const KinematicState s = randomState(rng);
    // Measured against the energy scale: the recoil energy can dwarf M and
    // q_f^2 - M^2 then carries ~eps q_f^0^2 of irreducible rounding.
    const double scale = std::max(s.M * s.M, s.q_f[0] * s.q_f[0]);
    worst = std::max(worst,
                     std::abs(minkowskiSquare(s.q_f) - s.M * s.M) / scale);
  }
  return worst;
}

double limitChainDeviation() {
  const CouplingConfig c;
  double worst = 0.0;
  // Rutherford corner: E/M = 1e-5, beta = 1e-2.
  {
    const double m = 1.0, beta = 1e-2;
    const double E = m / std::sqrt(1.0 - beta * beta);
    const double M = E / 1e-5;
    for (double theta : {M_PI / 6.0, M_PI / 2.0, 5.0 * M_PI / 6.0}) {
      const double e_prime = scatteredEnergy(E, m, M, theta);
      const double full = dsigmaEnergyForm(E, e_prime, theta, m, M, c).value;
      const double ruth = rutherfordLimit(beta, theta, M, c.G).value;
      worst = std::max(worst, std::abs(full / ruth - 1.0) / 1e-3);
    }
  }
  // Mott-like corner: E/M = 1e-4, beta = 0.5.
  {
    const double m = 1.0, beta = 0.5;
    const double E = m / std::sqrt(1.0 - beta * beta);
    const double M = E / 1e-4;
    const double theta = M_PI / 2.0;
    const double e_prime = scatteredEnergy(E, m, M, theta);
    const double full = dsigmaEnergyForm(E, e_prime, theta, m, M, c).value;
    const double mott = mottLikeLimit(beta, theta, M, c).value;
    worst = std::max(worst, std::abs(full / mott - 1.0) / 1e-3);
  }
  // Ultra-relativistic corner: m/E = 1e-5, E/M = 0.5.
  {
    const double E = 1.0, m = 1e-5, M = 2.0, theta = M_PI / 2.0;
    const double e_prime = scatteredEnergy(E, m, M, theta);
    const double full = dsigmaEnergyForm(E, e_prime, theta, m, M, c).value;
    const double ur = ultrarelativisticLimit(E, theta, M, c).value;
    worst = std::max(worst, std::abs(full / ur - 1.0) / 1e-3);
  }
  return worst;
}

}  // namespace

std::vector<SuiteResult> runSelfTest(std::uint64_t seed) {
  RandomSource rng(seed);
  std::vector<SuiteResult> out;
  auto add = [&out](const char* name, double dev, double tol) {
    out.push_back({name, dev, tol, dev <= tol});
  };
  add("clifford_algebra", cliffordDeviation(), 1e-15);
  add("dirac_equation", diracEquationDeviation(rng, 1000), 1e-12);
  add("spinor_completeness", completenessDeviation(rng, 1000), 1e-12);
  add("current_conservation", currentConservationDeviation(rng, 500), 1e-12);
  add("trace_vs_bruteforce", traceVsBruteDeviation(rng, 1000), 1e-10);
  add("xsec_form_equivalence", xsecEquivalenceDeviation(rng, 1000), 1e-9);
  add("boost_invariance", boostInvarianceDeviation(rng, 200), 1e-9);
  add("kinematic_closure", closureDeviation(rng, 1000), 1e-9);
  // limit_chain deviations are pre-scaled by their tolerances; pass is <= 1.
  add("limit_chain", limitChainDeviation(), 1.0);
  return out;
}

std::string formatSelfTestReport(const std::vector<SuiteResult>& results) {
  std::string report;
  char line[160];
  for (const auto& r : results) {
    std::snprintf(line, sizeof(line), "%-22s max_dev=%.6e  tol=%.1e  %s\n",
                  r.name.c_str(), r.max_deviation, r.tolerance,
                  r.passed ? "PASS" : "FAIL");
    report += line;
  }
  return report;
}

}  // namespace gravxs
