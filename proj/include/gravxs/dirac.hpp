#pragma once

#include <complex>

#include <Eigen/Dense>

#include "gravxs/four_vector.hpp"

namespace gravxs {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix4cd;
using Spinor = Eigen::Vector4cd;          // column spinor u
using AdjointSpinor = Eigen::RowVector4cd;  // row spinor ubar
using CurrentVector = Eigen::Vector4cd;   // J^mu = ubar_f gamma^mu u_i

enum class Spin { Up, Down };
inline constexpr Spin kSpins[2] = {Spin::Up, Spin::Down};

// Gamma-matrix representation. Dirac is the working basis; Chiral exists
// so that representation independence of spin-averaged results can be
// checked numerically.
enum class GammaBasis { Dirac, Chiral };

// gamma^mu (contravariant index), mu in 0..3. Throws on out-of-range mu.
const Matrix4c& gammaMatrix(int mu, GammaBasis basis = GammaBasis::Dirac);

// gamma^mu p_mu
Matrix4c feynmanSlash(const FourVector& p, GammaBasis basis = GammaBasis::Dirac);

// Positive-energy on-shell spinor u(p, spin) normalized to ubar u = 1.
// Requires |p^2 - m^2| <= 1e-9 m^2, p^0 > 0, m > 0.
Spinor diracSpinor(const FourVector& p, double m, Spin spin,
                   GammaBasis basis = GammaBasis::Dirac);

// ubar = u^dagger gamma^0
AdjointSpinor adjointSpinor(const Spinor& u, GammaBasis basis = GammaBasis::Dirac);

// J^mu = ubar_f gamma^mu u_i
CurrentVector bilinearCurrent(const Spinor& u_f, const Spinor& u_i,
                              GammaBasis basis = GammaBasis::Dirac);

// (pslash + m) / (2m); equals sum_spin u(p,s) ubar(p,s)
Matrix4c energyProjector(const FourVector& p, double m,
                         GammaBasis basis = GammaBasis::Dirac);

inline Complex trace(const Matrix4c& m) { return m.trace(); }

}  // namespace gravxs
