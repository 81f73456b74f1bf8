#pragma once

#include <cmath>

#include "gravxs/kinematics.hpp"
#include "gravxs/random_states.hpp"

namespace gravxs::testing {

// Independent root-finding oracle for the recoil energy: bisects
// (p_i + q_i - p_f)^2 - M^2 = 0 over E' in [m, E], never touching the
// closed-form quadratic used by the implementation.
inline double bisectionScatteredEnergy(double E, double m, double M,
                                       double theta) {
  auto onShellResidual = [&](double e_prime) {
    const double p = std::sqrt((E - m) * (E + m));
    const double pp = std::sqrt((e_prime - m) * (e_prime + m));
    const FourVector p_i(E, 0.0, 0.0, p);
    const FourVector p_f(e_prime, pp * std::sin(theta), 0.0,
                         pp * std::cos(theta));
    const FourVector q_i(M, 0.0, 0.0, 0.0);
    return minkowskiSquare(p_i + q_i - p_f) - M * M;
  };
  double lo = m, hi = E;
  double f_lo = onShellResidual(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = onShellResidual(mid);
    if ((f_lo <= 0.0) == (f_mid <= 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline FourVector randomOnShellMomentum(RandomSource& rng, double m,
                                        double pmax) {
  const double pmag = rng.logUniform(1e-3 * m, pmax);
  const double ct = rng.uniform(-1.0, 1.0);
  const double st = std::sqrt(1.0 - ct * ct);
  const double ph = rng.uniform(0.0, 2.0 * M_PI);
  return FourVector(std::sqrt(m * m + pmag * pmag), pmag * st * std::cos(ph),
                    pmag * st * std::sin(ph), pmag * ct);
}

inline double relDiff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace gravxs::testing
