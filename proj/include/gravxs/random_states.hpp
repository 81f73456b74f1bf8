#pragma once

#include <cstdint>
#include <random>

#include "gravxs/kinematics.hpp"

namespace gravxs {

// Deterministic uniform sampling on top of mt19937_64. std::uniform_real
// distributions are not bit-stable across standard libraries, the raw
// engine output is; reports built from these samples must be byte-identical
// for a fixed seed.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = (engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  double logUniform(double lo, double hi) {
    return lo * std::exp(uniform(0.0, std::log(hi / lo)));
  }

 private:
  std::mt19937_64 engine_;
};

struct StateRanges {
  double mass_lo = 0.1, mass_hi = 100.0;      // GeV, both particles
  double e_over_m_lo = 1e-4, e_over_m_hi = 1e2;  // E/M, log-uniform
  double theta_lo = 1e-3, theta_hi = M_PI;
};

inline KinematicState randomState(RandomSource& rng,
                                  const StateRanges& r = {}) {
  // Rejection keeps E > m without ever leaving the E/M range.
  double m = 0.0, M = 0.0, E = 0.0;
  do {
    m = rng.logUniform(r.mass_lo, r.mass_hi);
    M = rng.logUniform(r.mass_lo, r.mass_hi);
    E = M * rng.logUniform(r.e_over_m_lo, r.e_over_m_hi);
  } while (E <= m * (1.0 + 1e-6));
  // A projectile heavier than the target has a maximum lab angle.
  double theta_hi = r.theta_hi;
  if (m > M) {
    theta_hi = std::min(theta_hi, 0.999 * maxScatteringAngle(E, m, M));
  }
  const double theta = rng.uniform(std::min(r.theta_lo, 0.5 * theta_hi),
                                   theta_hi);
  const double phi = rng.uniform(0.0, 2.0 * M_PI);
  return buildState(E, m, M, theta, phi);
}

}  // namespace gravxs
