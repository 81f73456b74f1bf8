#pragma once

#include <cmath>

#include "gravxs/dirac.hpp"
#include "gravxs/kinematics.hpp"

namespace gravxs {

// Gravitational coupling in natural units. (g ell_P)^2 = g_squared * G.
struct CouplingConfig {
  double G = 1.0;                   // Newton constant, GeV^-2
  double g_squared = 4.0 * M_PI;    // dimensionless, default 4*pi

  double planckLength() const { return std::sqrt(G); }
  double couplingSquared() const { return g_squared * G; }  // (g ell_P)^2
};

// Spin assignment for one 2->2 amplitude evaluation.
struct SpinAssignment {
  Spin light_in = Spin::Up;
  Spin light_out = Spin::Up;
  Spin heavy_in = Spin::Up;
  Spin heavy_out = Spin::Up;
};

// Invariant matrix element
//   M = -(g lP)^2 [ubar_f gamma^mu u_i] (p_i+p_f).(q_i+q_f) / (4 t)
//       [Ubar_f gamma_mu U_i]
// Throws if t = 0 (forward singularity).
Complex matrixElement(const KinematicState& state, const SpinAssignment& spins,
                      const CouplingConfig& c,
                      GammaBasis basis = GammaBasis::Dirac);

// Same amplitude from explicit momenta (used for boost-invariance checks).
Complex matrixElement(const FourVector& p_i, const FourVector& p_f,
                      const FourVector& q_i, const FourVector& q_f, double m,
                      double M, const SpinAssignment& spins,
                      const CouplingConfig& c,
                      GammaBasis basis = GammaBasis::Dirac);

// Spin-sum tensor of one fermion line,
//   L^{mu nu} = (p_i^mu p_f^nu + p_i^nu p_f^mu - (p_i.p_f - m^2) eta^{mu nu}) / m^2
Eigen::Matrix4d leptonTensor(const FourVector& p_i, const FourVector& p_f,
                             double m);

// (1/4) sum over all 16 spin assignments of |M|^2, by explicit spinors.
double spinAveragedMsqBruteForce(const KinematicState& state,
                                 const CouplingConfig& c,
                                 GammaBasis basis = GammaBasis::Dirac);
double spinAveragedMsqBruteForce(const FourVector& p_i, const FourVector& p_f,
                                 const FourVector& q_i, const FourVector& q_f,
                                 double m, double M, const CouplingConfig& c,
                                 GammaBasis basis = GammaBasis::Dirac);

// Closed trace formula for the same average, built from Minkowski dots only.
double spinAveragedMsqTrace(const KinematicState& state,
                            const CouplingConfig& c);
double spinAveragedMsqTrace(const FourVector& p_i, const FourVector& p_f,
                            const FourVector& q_i, const FourVector& q_f,
                            double m, double M, const CouplingConfig& c);

// (g lP)^2 (p_i+p_f).(q_i+q_f)/4; in the heavy rest frame this is
// (g lP)^2 M (E + E') / 2 — the analogue of e e' in electrodynamics.
double interactionStrength(const KinematicState& state,
                           const CouplingConfig& c);

struct Perturbativity {
  double value = 0.0;       // (g lP)^2 M (E + E') / 2, dimensionless
  bool perturbative = false;  // value < 0.1
};

Perturbativity perturbativityIndicator(const KinematicState& state,
                                       const CouplingConfig& c);

}  // namespace gravxs
