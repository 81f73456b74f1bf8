#include "gravxs/amplitude.hpp"

#include <stdexcept>

namespace gravxs {

namespace {

Complex contract(const CurrentVector& j, const CurrentVector& k) {
  return j[0] * k[0] - j[1] * k[1] - j[2] * k[2] - j[3] * k[3];
}

double mandelstamTOf(const FourVector& p_i, const FourVector& p_f) {
  const double t = minkowskiSquare(p_f - p_i);
  if (t == 0.0) {
    throw std::domain_error("amplitude: t = 0 (forward kinematics)");
  }
  return t;
}

}  // namespace

Complex matrixElement(const FourVector& p_i, const FourVector& p_f,
                      const FourVector& q_i, const FourVector& q_f, double m,
                      double M, const SpinAssignment& spins,
                      const CouplingConfig& c, GammaBasis basis) {
  const double t = mandelstamTOf(p_i, p_f);
  const double strength = minkowskiDot(p_i + p_f, q_i + q_f);
  const Spinor u_i = diracSpinor(p_i, m, spins.light_in, basis);
  const Spinor u_f = diracSpinor(p_f, m, spins.light_out, basis);
  const Spinor w_i = diracSpinor(q_i, M, spins.heavy_in, basis);
  const Spinor w_f = diracSpinor(q_f, M, spins.heavy_out, basis);
  const CurrentVector j = bilinearCurrent(u_f, u_i, basis);
  const CurrentVector k = bilinearCurrent(w_f, w_i, basis);
  return -c.couplingSquared() * contract(j, k) * strength / (4.0 * t);
}

Complex matrixElement(const KinematicState& s, const SpinAssignment& spins,
                      const CouplingConfig& c, GammaBasis basis) {
  return matrixElement(s.p_i, s.p_f, s.q_i, s.q_f, s.m, s.M, spins, c, basis);
}

Eigen::Matrix4d leptonTensor(const FourVector& p_i, const FourVector& p_f,
                             double m) {
  const double dot = minkowskiDot(p_i, p_f);
  return (p_i * p_f.transpose() + p_f * p_i.transpose() -
          (dot - m * m) * minkowskiMetric()) /
         (m * m);
}

double spinAveragedMsqBruteForce(const FourVector& p_i, const FourVector& p_f,
                                 const FourVector& q_i, const FourVector& q_f,
                                 double m, double M, const CouplingConfig& c,
                                 GammaBasis basis) {
  const double t = mandelstamTOf(p_i, p_f);
  const double strength = minkowskiDot(p_i + p_f, q_i + q_f);

  CurrentVector light[2][2];  // [out][in]
  CurrentVector heavy[2][2];
  Spinor u_i[2], u_f[2], w_i[2], w_f[2];
  for (int s = 0; s < 2; ++s) {
    u_i[s] = diracSpinor(p_i, m, kSpins[s], basis);
    u_f[s] = diracSpinor(p_f, m, kSpins[s], basis);
    w_i[s] = diracSpinor(q_i, M, kSpins[s], basis);
    w_f[s] = diracSpinor(q_f, M, kSpins[s], basis);
  }
  for (int f = 0; f < 2; ++f) {
    for (int i = 0; i < 2; ++i) {
      light[f][i] = bilinearCurrent(u_f[f], u_i[i], basis);
      heavy[f][i] = bilinearCurrent(w_f[f], w_i[i], basis);
    }
  }

  double sum = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int d = 0; d < 2; ++d)
        for (int e = 0; e < 2; ++e) sum += std::norm(contract(light[b][a], heavy[e][d]));

  const double prefactor = c.couplingSquared() * strength / (4.0 * t);
  return 0.25 * prefactor * prefactor * sum;
}

double spinAveragedMsqBruteForce(const KinematicState& s,
                                 const CouplingConfig& c, GammaBasis basis) {
  return spinAveragedMsqBruteForce(s.p_i, s.p_f, s.q_i, s.q_f, s.m, s.M, c,
                                   basis);
}

double spinAveragedMsqTrace(const FourVector& p_i, const FourVector& p_f,
                            const FourVector& q_i, const FourVector& q_f,
                            double m, double M, const CouplingConfig& c) {
  const double t = mandelstamTOf(p_i, p_f);
  const double strength = minkowskiDot(p_i + p_f, q_i + q_f);
  const double bracket =
      minkowskiDot(p_i, q_i) * minkowskiDot(p_f, q_f) +
      minkowskiDot(p_i, q_f) * minkowskiDot(p_f, q_i) -
      m * m * minkowskiDot(q_i, q_f) - M * M * minkowskiDot(p_i, p_f) +
      2.0 * m * m * M * M;
  const double g2lp2 = c.couplingSquared();
  return g2lp2 * g2lp2 * strength * strength / 16.0 /
         (2.0 * m * m * M * M * t * t) * bracket;
}

double spinAveragedMsqTrace(const KinematicState& s, const CouplingConfig& c) {
  return spinAveragedMsqTrace(s.p_i, s.p_f, s.q_i, s.q_f, s.m, s.M, c);
}

double interactionStrength(const KinematicState& s, const CouplingConfig& c) {
  return c.couplingSquared() * minkowskiDot(s.p_i + s.p_f, s.q_i + s.q_f) / 4.0;
}

Perturbativity perturbativityIndicator(const KinematicState& s,
                                       const CouplingConfig& c) {
  Perturbativity result;
  result.value = c.couplingSquared() * s.M * (s.E + s.E_prime) / 2.0;
  result.perturbative = result.value < 0.1;
  return result;
}

}  // namespace gravxs
