#pragma once

#include <functional>

#include "jcone/jcalc.hpp"

namespace jcone {

/// omega_P(U, V) = trd(P^-1 U P^-1 V) for U, V in p_J.
template <Scalar T>
double metric_omega(const JPositive<T>& p, const Matrix<T>& u, const Matrix<T>& v);

/// The geodesic of P_J through A (t = 0) and B (t = 1),
///   gamma(t) = A^{1/2}_J * (A^{-1/2}_J * B * A^{-1/2}_J)^t_J * A^{1/2}_J.
/// The endpoint-dependent factors are computed once, so sampling many t
/// costs one J-power each.
template <Scalar T>
class GeodesicPath {
 public:
  GeodesicPath(const JPositive<T>& a, const JPositive<T>& b);

  const JPositive<T>& endpoint_a() const { return a_; }
  const JPositive<T>& endpoint_b() const { return b_; }
  JPositive<T> sample(double t) const;

 private:
  JPositive<T> a_;
  JPositive<T> b_;
  Matrix<T> a_half_;
  JPositive<T> inner_;
};

template <Scalar T>
JPositive<T> geodesic(const JPositive<T>& a, const JPositive<T>& b, double t) {
  return GeodesicPath<T>(a, b).sample(t);
}

inline constexpr double kDefaultOdeStep = 1e-4;

/// ||c'' - c' c^-1 c'||_F at t for any curve, with central differences of
/// step h. Throws kStepTooSmall for h < 1e-7.
template <Scalar T>
double curve_ode_residual(const std::function<Matrix<T>(double)>& curve, double t, double h);

/// The same residual along the geodesic from A to B; t must lie in (h, 1 - h).
template <Scalar T>
double geodesic_ode_residual(const JPositive<T>& a, const JPositive<T>& b, double t,
                             double h = kDefaultOdeStep);

/// ||log((JA)^{-1/2} (JB) (JA)^{-1/2})||_F.
template <Scalar T>
double geodesic_distance(const JPositive<T>& a, const JPositive<T>& b);

}  // namespace jcone
