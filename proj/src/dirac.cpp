#include "gravxs/dirac.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace gravxs {

namespace {

constexpr Complex kI{0.0, 1.0};

Eigen::Matrix2cd pauli(int k) {
  Eigen::Matrix2cd s;
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -kI, kI, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

std::array<Matrix4c, 4> buildDiracBasis() {
  std::array<Matrix4c, 4> g;
  g[0].setZero();
  g[0].block<2, 2>(0, 0) = Eigen::Matrix2cd::Identity();
  g[0].block<2, 2>(2, 2) = -Eigen::Matrix2cd::Identity();
  for (int k = 1; k < 4; ++k) {
    g[k].setZero();
    g[k].block<2, 2>(0, 2) = pauli(k);
    g[k].block<2, 2>(2, 0) = -pauli(k);
  }
  return g;
}

std::array<Matrix4c, 4> buildChiralBasis() {
  std::array<Matrix4c, 4> g;
  g[0].setZero();
  g[0].block<2, 2>(0, 2) = Eigen::Matrix2cd::Identity();
  g[0].block<2, 2>(2, 0) = Eigen::Matrix2cd::Identity();
  for (int k = 1; k < 4; ++k) {
    g[k].setZero();
    g[k].block<2, 2>(0, 2) = pauli(k);
    g[k].block<2, 2>(2, 0) = -pauli(k);
  }
  return g;
}

// Unitary change of basis: gamma_chiral = S gamma_dirac S^dagger.
const Matrix4c& diracToChiral() {
  static const Matrix4c s = [] {
    Matrix4c m;
    m.setZero();
    const double r = 1.0 / std::sqrt(2.0);
    m.block<2, 2>(0, 0) = r * Eigen::Matrix2cd::Identity();
    m.block<2, 2>(0, 2) = -r * Eigen::Matrix2cd::Identity();
    m.block<2, 2>(2, 0) = r * Eigen::Matrix2cd::Identity();
    m.block<2, 2>(2, 2) = r * Eigen::Matrix2cd::Identity();
    return m;
  }();
  return s;
}

}  // namespace

const Matrix4c& gammaMatrix(int mu, GammaBasis basis) {
  if (mu < 0 || mu > 3) {
    throw std::out_of_range("gammaMatrix: index must be in 0..3");
  }
  static const std::array<Matrix4c, 4> dirac = buildDiracBasis();
  static const std::array<Matrix4c, 4> chiral = buildChiralBasis();
  return basis == GammaBasis::Dirac ? dirac[mu] : chiral[mu];
}

Matrix4c feynmanSlash(const FourVector& p, GammaBasis basis) {
  const FourVector pl = lowerIndex(p);
  Matrix4c m = pl[0] * gammaMatrix(0, basis);
  for (int mu = 1; mu < 4; ++mu) m += pl[mu] * gammaMatrix(mu, basis);
  return m;
}

Spinor diracSpinor(const FourVector& p, double m, Spin spin, GammaBasis basis) {
  if (m <= 0.0) throw std::domain_error("diracSpinor: m must be > 0");
  if (p[0] <= 0.0) throw std::domain_error("diracSpinor: p^0 must be > 0");
  // The p^0^2 term admits the rounding floor of E^2 - |p|^2 for
  // ultra-relativistic momenta; it is still ~1e3x above double noise.
  if (std::abs(minkowskiSquare(p) - m * m) >
      1e-9 * m * m + 1e-12 * p[0] * p[0]) {
    throw std::domain_error("diracSpinor: momentum off shell");
  }
  const double energy = p[0];
  Eigen::Vector2cd chi = spin == Spin::Up ? Eigen::Vector2cd(1, 0)
                                          : Eigen::Vector2cd(0, 1);
  Eigen::Matrix2cd sigma_p =
      p[1] * pauli(1) + p[2] * pauli(2) + p[3] * pauli(3);
  // ubar u = 1 normalization
  const double norm = std::sqrt((energy + m) / (2.0 * m));
  Spinor u;
  u.head<2>() = norm * chi;
  u.tail<2>() = (norm / (energy + m)) * (sigma_p * chi);
  if (basis == GammaBasis::Chiral) u = diracToChiral() * u;
  return u;
}

AdjointSpinor adjointSpinor(const Spinor& u, GammaBasis basis) {
  return u.adjoint() * gammaMatrix(0, basis);
}

CurrentVector bilinearCurrent(const Spinor& u_f, const Spinor& u_i,
                              GammaBasis basis) {
  const AdjointSpinor ubar_f = adjointSpinor(u_f, basis);
  CurrentVector j;
  for (int mu = 0; mu < 4; ++mu) j[mu] = ubar_f * gammaMatrix(mu, basis) * u_i;
  return j;
}

Matrix4c energyProjector(const FourVector& p, double m, GammaBasis basis) {
  if (m <= 0.0) throw std::domain_error("energyProjector: m must be > 0");
  return (feynmanSlash(p, basis) + m * Matrix4c::Identity()) / (2.0 * m);
}

}  // namespace gravxs
