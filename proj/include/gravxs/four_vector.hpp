#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace gravxs {

// Contravariant four-vector, index 0 = time, metric diag(1,-1,-1,-1).
// Components in GeV (natural units c = hbar = 1).
using FourVector = Eigen::Vector4d;
using Vector3 = Eigen::Vector3d;

inline const Eigen::Matrix4d& minkowskiMetric() {
  static const Eigen::Matrix4d eta =
      Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
  return eta;
}

inline double minkowskiDot(const FourVector& a, const FourVector& b) {
  return a[0] * b[0] - a.tail<3>().dot(b.tail<3>());
}

inline double minkowskiSquare(const FourVector& a) {
  return minkowskiDot(a, a);
}

// Index lowering (involution: applying twice is the identity).
inline FourVector lowerIndex(const FourVector& a) {
  FourVector r = a;
  r.tail<3>() *= -1.0;
  return r;
}

// Pure boost with velocity v (|v| < 1). Throws on superluminal input.
inline FourVector lorentzBoost(const FourVector& x, const Vector3& v) {
  const double v2 = v.squaredNorm();
  if (v2 >= (1.0 - 1e-9) * (1.0 - 1e-9)) {
    throw std::domain_error("lorentzBoost: |v| must be < 1 - 1e-9");
  }
  if (v2 == 0.0) return x;
  const double gamma = 1.0 / std::sqrt(1.0 - v2);
  const Vector3 p = x.tail<3>();
  const double vp = v.dot(p);
  FourVector r;
  r[0] = gamma * (x[0] + vp);
  r.tail<3>() = p + ((gamma - 1.0) * vp / v2 + gamma * x[0]) * v;
  return r;
}

}  // namespace gravxs
