#include "gravxs/cross_section.hpp"

#include <cmath>
#include <stdexcept>

namespace gravxs {

namespace {

void checkAngle(double theta) {
  if (!(theta > 0.0) || !(theta <= M_PI)) {
    throw std::domain_error("cross_section: require theta in (0, pi]");
  }
}

double momentumOf(double energy, double mass) {
  return std::sqrt((energy - mass) * (energy + mass));
}

}  // namespace

CrossSectionValue dsigmaRecoilForm(const KinematicState& s,
                                   const CouplingConfig& c) {
  checkAngle(s.theta);
  const double p = momentumOf(s.E, s.m);
  // |p'| from the stored spatial momentum: buildState computes it from the
  // cancellation-free kinetic energy, which momentumOf(E', m) cannot match
  // near the stopping corner.
  const double pp = s.p_f.tail<3>().norm();
  const double denom =
      s.M + s.E - (p / pp) * s.E_prime * std::cos(s.theta);
  if (!(denom > 0.0) || !std::isfinite(denom)) {
    throw std::runtime_error("dsigmaRecoilForm: degenerate recoil denominator");
  }
  const double msq = spinAveragedMsqTrace(s, c);
  const double value = 1.0 / (4.0 * M_PI * M_PI) * (pp / p) * s.m * s.m * s.M /
                       denom * msq;
  return {value, XsProvenance::FullRecoil};
}

CrossSectionValue dsigmaEnergyForm(double E, double E_prime, double theta,
                                   double m, double M,
                                   const CouplingConfig& c) {
  checkAngle(theta);
  // E_prime == E is admitted: it is what the elastic root rounds to when
  // the transfer sits below the double-precision floor of E, and the
  // transfer used below is recomputed in a form that stays positive there.
  if (E_prime > E) {
    throw std::domain_error("dsigmaEnergyForm: E' > E (forward kinematics)");
  }
  // T = E' - m and E - E' both re-derived in cancellation-free form; raw
  // subtractions lose most digits when either sits far below E. One of the
  // two is always well conditioned, and transfer = (E - m) - T links them.
  const double t_out = scatteredKineticEnergy(E, m, M, theta);
  const double transfer = t_out < 0.5 * (E - m)
                              ? (E - m) - t_out
                              : energyTransfer(E, E_prime, m, M, theta);
  const double p = momentumOf(E, m);
  const double pp = std::sqrt(t_out * (t_out + 2.0 * m));
  const double flux_denom = E * E_prime - m * m * (1.0 + transfer / M);
  const double prefactor = pp * pp * pp / p * m * m / flux_denom;
  const double g2lp2 = c.couplingSquared();
  const double strength = g2lp2 * g2lp2 / (16.0 * M_PI * M_PI) * M * M *
                          (E + E_prime) * (E + E_prime) / 4.0;
  const double bracket = (E * E + E_prime * E_prime) / (M * M) -
                         (1.0 + m * m / (M * M)) * (transfer / M);
  const double value =
      prefactor * strength / (2.0 * m * m * transfer * transfer) * bracket;
  return {value, XsProvenance::EnergyForm};
}

CrossSectionValue mottLikeLimit(double beta, double theta, double M,
                                const CouplingConfig& c) {
  checkAngle(theta);
  // beta = 1 is admitted: it is the relativistic endpoint the
  // ultra-relativistic formula reduces to, finite for every theta.
  if (!(beta > 0.0) || !(beta <= 1.0)) {
    throw std::domain_error("mottLikeLimit: require beta in (0, 1]");
  }
  const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
  const double value = c.g_squared * c.g_squared / (16.0 * M_PI * M_PI) * c.G *
                       c.G * M * M * (1.0 - beta * beta * s2) /
                       (4.0 * beta * beta * beta * beta * s2 * s2);
  return {value, XsProvenance::MottLike};
}

CrossSectionValue rutherfordLimit(double v, double theta, double M, double G) {
  checkAngle(theta);
  if (!(v > 0.0) || !(v < 1.0)) {
    throw std::domain_error("rutherfordLimit: require v in (0, 1)");
  }
  const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
  return {G * G * M * M / (4.0 * v * v * v * v * s2 * s2),
          XsProvenance::Rutherford};
}

CrossSectionValue ultrarelativisticLimit(double E, double theta, double M,
                                         const CouplingConfig& c) {
  checkAngle(theta);
  if (!(E > 0.0)) throw std::domain_error("ultrarelativisticLimit: E <= 0");
  const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
  const double c2 = std::cos(0.5 * theta) * std::cos(0.5 * theta);
  const double x = E / M * s2;
  const double g2lp2 = c.couplingSquared();
  const double value =
      g2lp2 * g2lp2 / (16.0 * M_PI * M_PI) * M * M / (4.0 * s2 * s2) *
      (1.0 + x) * (1.0 + x) / ((1.0 + 2.0 * x) * (1.0 + 2.0 * x) * (1.0 + 2.0 * x)) *
      (c2 + 2.0 * (E / M) * (E / M) * s2 * s2 / (1.0 + 2.0 * x));
  return {value, XsProvenance::UltraRelativistic};
}

double integrateAngular(const std::function<double(double)>& dsigma,
                        const AngularGrid& grid) {
  if (!(grid.theta_min > 0.0) || !(grid.theta_min < grid.theta_max) ||
      !(grid.theta_max <= M_PI) || grid.n_points < 2) {
    throw std::domain_error("integrateAngular: invalid grid");
  }
  // Simpson needs an even interval count.
  int intervals = grid.n_points - 1;
  if (intervals % 2 != 0) ++intervals;

  if (grid.spacing == GridSpacing::UniformTheta) {
    const double h = (grid.theta_max - grid.theta_min) / intervals;
    double sum = 0.0;
    for (int i = 0; i <= intervals; ++i) {
      const double th = grid.theta_min + i * h;
      const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      sum += w * std::sin(th) * dsigma(th);
    }
    return 2.0 * M_PI * sum * h / 3.0;
  }

  // Uniform in u = cos(theta); sin(theta) dtheta = -du.
  const double u_lo = std::cos(grid.theta_max);
  const double u_hi = std::cos(grid.theta_min);
  const double h = (u_hi - u_lo) / intervals;
  double sum = 0.0;
  for (int i = 0; i <= intervals; ++i) {
    const double u = u_lo + i * h;
    const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += w * dsigma(std::acos(std::min(std::max(u, -1.0), 1.0)));
  }
  return 2.0 * M_PI * sum * h / 3.0;
}

double integratedCrossSection(double E, double m, double M,
                              const AngularGrid& grid,
                              const CouplingConfig& c) {
  return integrateAngular(
      [&](double theta) {
        const double e_prime = scatteredEnergy(E, m, M, theta);
        return dsigmaEnergyForm(E, e_prime, theta, m, M, c).value;
      },
      grid);
}

}  // namespace gravxs
