#include "gravxs/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace gravxs {

namespace {

void checkInputs(double E, double m, double M, double theta) {
  if (!(m > 0.0) || !(E > m)) {
    throw std::domain_error("kinematics: require E > m > 0");
  }
  if (!(M > 0.0)) throw std::domain_error("kinematics: require M > 0");
  if (!(theta > 0.0) || !(theta <= M_PI)) {
    throw std::domain_error("kinematics: require theta in (0, pi]");
  }
}

double momentumOf(double energy, double mass) {
  return std::sqrt((energy - mass) * (energy + mass));
}

// Refine T = e_prime - m near the stopping corner (m ~ M, large angle),
// where T sits orders below E and the primary root carries ~eps E of
// absolute error. The quadratic shifted to T has constant term factoring
// exactly as (m - M)^2 (E - m)^2, so T comes out cancellation-free.
double refineKineticEnergy(double E, double m, double M, double c,
                           double a2c2, double e_prime) {
  const double t_cur = e_prime - m;
  if (t_cur >= 1e-3 * m) return t_cur;
  const double a = E + M;
  const double lin = a * (m - M) * (E - m) - m * c * c;
  const double c0 = (m - M) * (m - M) * (E - m) * (E - m);
  const double disc_t = lin * lin - a2c2 * c0;
  if (disc_t < 0.0 || lin == 0.0) return t_cur;
  const double q = -(lin + std::copysign(std::sqrt(disc_t), lin));
  const double t1 = q / a2c2;
  const double t2 = c0 / q;
  const double t_fix = std::abs(t1 - t_cur) < std::abs(t2 - t_cur) ? t1 : t2;
  return (t_fix >= 0.0 && t_fix <= E - m) ? t_fix : t_cur;
}

}  // namespace

double maxScatteringAngle(double E, double m, double M) {
  if (!(m > 0.0) || !(E > m) || !(M > 0.0)) {
    throw std::domain_error("maxScatteringAngle: require E > m > 0, M > 0");
  }
  if (m <= M) return M_PI;
  const double p = momentumOf(E, m);
  const double a = E + M;
  const double b = m * m + M * E;
  // cos^2(theta_max) = (m^2 a^2 - b^2) / (m^2 p^2), always in (0, 1]
  return std::acos(std::sqrt(m * m * a * a - b * b) / (m * p));
}

double scatteredEnergy(double E, double m, double M, double theta) {
  checkInputs(E, m, M, theta);
  const double p = momentumOf(E, m);
  const double a = E + M;               // quadratic: (a^2-c^2) E'^2 - 2abE' + b^2 + c^2 m^2 = 0
  const double b = m * m + M * E;
  const double c = p * std::cos(theta);
  const double a2c2 = a * a - c * c;    // > 0: a > E > p >= |c|
  const double disc = b * b - m * m * a2c2;
  if (disc < 0.0) {
    throw std::domain_error(
        "scatteredEnergy: no elastic solution at this angle (m > M bounds "
        "the lab scattering angle)");
  }
  // Signed c picks the branch continuous with E'(theta -> 0) = E.
  double e_prime = (a * b + c * std::sqrt(disc)) / a2c2;
  // Guard against a spurious root from squaring (c < 0 side).
  const double residual = a * e_prime - b - c * momentumOf(std::max(e_prime, m), m);
  if (std::abs(residual) > 1e-6 * a * E || e_prime > E * (1.0 + 1e-12) ||
      e_prime < m * (1.0 - 1e-12)) {
    e_prime = (a * b - c * std::sqrt(disc)) / a2c2;
  }
  e_prime = std::min(std::max(e_prime, m), E);
  e_prime = m + refineKineticEnergy(E, m, M, c, a2c2, e_prime);
  // When the transfer is tiny the quadratic root loses the leading digits
  // of E - E'; polish through the cancellation-free transfer form.
  const double transfer = energyTransfer(E, e_prime, m, M, theta);
  if (transfer < 1e-3 * E) {
    for (int it = 0; it < 3; ++it) {
      e_prime = E - energyTransfer(E, e_prime, m, M, theta);
    }
  }
  if (!(e_prime >= m) || !(e_prime <= E)) {
    throw std::runtime_error("scatteredEnergy: no root in [m, E]");
  }
  return e_prime;
}

double scatteredKineticEnergy(double E, double m, double M, double theta) {
  const double e_prime = scatteredEnergy(E, m, M, theta);
  const double p = momentumOf(E, m);
  const double c = p * std::cos(theta);
  const double a = E + M;
  return refineKineticEnergy(E, m, M, c, a * a - c * c, e_prime);
}

double energyTransfer(double E, double E_prime, double m, double M,
                      double theta) {
  const double p = momentumOf(E, m);
  const double pp = momentumOf(E_prime, m);
  const double s2 = std::sin(0.5 * theta);
  // From a E' - b = c|p'| with a = E + M: E - E' =
  // 2 p p' sin^2(theta/2) / (E + M - p (E + E') / (p + p')).
  const double denom = (E + M) - p * (E + E_prime) / (p + pp);
  if (denom <= 0.0) {
    // Degenerate only when p' -> 0 with m ~ M; fall back to the subtraction.
    return E - E_prime;
  }
  return 2.0 * p * pp * s2 * s2 / denom;
}

KinematicState buildState(double E, double m, double M, double theta,
                          double phi) {
  KinematicState s;
  s.m = m;
  s.M = M;
  s.E = E;
  s.theta = theta;
  s.phi = phi;
  const double t_out = scatteredKineticEnergy(E, m, M, theta);
  s.E_prime = m + t_out;
  const double p = momentumOf(E, m);
  const double pp = std::sqrt(t_out * (t_out + 2.0 * m));
  s.p_i = FourVector(E, 0.0, 0.0, p);
  s.p_f = FourVector(s.E_prime, pp * std::sin(theta) * std::cos(phi),
                     pp * std::sin(theta) * std::sin(phi),
                     pp * std::cos(theta));
  s.q_i = FourVector(M, 0.0, 0.0, 0.0);
  s.q_f = s.p_i + s.q_i - s.p_f;
  return s;
}

double mandelstamT(const KinematicState& state) {
  return minkowskiSquare(state.p_f - state.p_i);
}

std::array<FourVector, 4> lorentzBoost(const KinematicState& state,
                                       const Vector3& velocity) {
  return {lorentzBoost(state.p_i, velocity), lorentzBoost(state.p_f, velocity),
          lorentzBoost(state.q_i, velocity), lorentzBoost(state.q_f, velocity)};
}

}  // namespace gravxs
