#pragma once

#include <functional>

#include "gravxs/amplitude.hpp"

namespace gravxs {

enum class XsProvenance {
  FullRecoil,
  EnergyForm,
  MottLike,
  Rutherford,
  UltraRelativistic,
};

// dsigma/dOmega' in GeV^-2, tagged by the formula that produced it.
struct CrossSectionValue {
  double value = 0.0;
  XsProvenance provenance = XsProvenance::FullRecoil;
};

// Full cross-section in the heavy rest frame, recoil (flux/phase-space) form:
//   (1/(2pi)^2) (|p'|/|p|) m^2 M / (M + E - (|p|/|p'|) E' cos th) msq
CrossSectionValue dsigmaRecoilForm(const KinematicState& state,
                                   const CouplingConfig& c);

// Same quantity expressed through E and E' only; algebraically equal to the
// recoil form and cross-validated against it.
CrossSectionValue dsigmaEnergyForm(double E, double E_prime, double theta,
                                   double m, double M,
                                   const CouplingConfig& c);

// Heavy-scatterer (Mott-like) limit:
//   (g^4/(4pi)^2) G^2 M^2 (1 - beta^2 sin^2(th/2)) / (4 beta^4 sin^4(th/2))
CrossSectionValue mottLikeLimit(double beta, double theta, double M,
                                const CouplingConfig& c);

// Non-relativistic (Rutherford) limit: G^2 M^2 / (4 v^4 sin^4(th/2)).
// Independent of every property of the incoming particle except v.
CrossSectionValue rutherfordLimit(double v, double theta, double M, double G);

// Ultra-relativistic (m/E -> 0) limit in terms of E and theta.
CrossSectionValue ultrarelativisticLimit(double E, double theta, double M,
                                         const CouplingConfig& c);

enum class GridSpacing { UniformTheta, UniformCosTheta };

struct AngularGrid {
  double theta_min = 0.0;  // radians, > 0
  double theta_max = M_PI;
  int n_points = 2;
  GridSpacing spacing = GridSpacing::UniformTheta;
};

// 2 pi * integral of sin(theta) f(theta) over the grid range, composite
// Simpson with a fixed summation order.
double integrateAngular(const std::function<double(double)>& dsigma,
                        const AngularGrid& grid);

// sigma(theta_min, theta_max) for the full energy-form cross-section.
double integratedCrossSection(double E, double m, double M,
                              const AngularGrid& grid,
                              const CouplingConfig& c);

}  // namespace gravxs
