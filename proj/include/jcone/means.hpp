#pragma once

#include <optional>
#include <utility>

#include "jcone/geometry.hpp"
#include "jcone/order.hpp"

namespace jcone {

template <Scalar T>
struct MeanResult {
  JPositive<T> mean;
  /// ||X A^-1 X - B||_F, reported only for the midpoint t = 1/2.
  std::optional<double> riccati_residual;
  double weight = 0.5;
};

/// A #^J_t B for t in [0, 1]: the point at time t on the geodesic from A to B.
template <Scalar T>
MeanResult<T> weighted_mean(const JPositive<T>& a, const JPositive<T>& b, double t = 0.5);

template <Scalar T>
double riccati_residual(const Matrix<T>& x, const JPositive<T>& a, const JPositive<T>& b);

/// The unique solution in P_J of X A^-1 X = B.
template <Scalar T>
JPositive<T> riccati_solve(const JPositive<T>& a, const JPositive<T>& b);

/// PSD test of [[JA, JX], [JX, JB]]. Every X in P_J passing it satisfies
/// X <=_J A #^J B, and the mean itself passes with margin ~0.
template <Scalar T>
OrderVerdict maximality_check(const Matrix<T>& x, const JPositive<T>& a, const JPositive<T>& b,
                              double tol = kOrderTol);

/// [(1-t) A^{-1}_J + t B^{-1}_J]^{-1}_J, with every inverse a J-power.
template <Scalar T>
JPositive<T> harmonic_mean_j(const JPositive<T>& a, const JPositive<T>& b, double t);

/// (1-t) A + t B.
template <Scalar T>
JPositive<T> arithmetic_mean_j(const JPositive<T>& a, const JPositive<T>& b, double t);

inline constexpr double kCommutatorTol = 1e-8;

/// A^{1-t}_J * B^t_J, valid when A and B commute for the bullet product.
/// Throws kNotBulletCommuting when ||[A, B]_J||_F > 1e-8 max(1, ||A||_F ||B||_F).
template <Scalar T>
JPositive<T> commuting_bullet_mean(const JPositive<T>& a, const JPositive<T>& b, double t);

struct ImplicationVerdict {
  bool holds = false;
  /// True when the premise failed, in which case `holds` is vacuously true.
  bool vacuous = false;
  OrderVerdict premise;
  OrderVerdict conclusion;
};

/// A #^J_t B <=_J J  implies  A^r_J #^J_t B^r_J <=_J J, for r >= 1, t in (0, 1).
template <Scalar T>
ImplicationVerdict ando_hiai_check(const JPositive<T>& a, const JPositive<T>& b, double t,
                                   double r, double tol = kOrderTol);

/// Scales both matrices by one factor mu so that A #^J_t B <=_J J holds with
/// margin `margin`: mu = (1 - margin) / lambda_max(J (A #^J_t B)).
template <Scalar T>
std::pair<JPositive<T>, JPositive<T>> normalize_ando_hiai_premise(const JPositive<T>& a,
                                                                  const JPositive<T>& b,
                                                                  double t,
                                                                  double margin = 0.05);

/// Checks (A^{r/2}_J * B^p_J * A^{r/2}_J)^{r/(r+p)}_J <=_J A^r_J given
/// 0 <_J B <=_J A. Throws kPremiseViolated when B <=_J A fails.
template <Scalar T>
OrderVerdict furuta_check(const JPositive<T>& a, const JPositive<T>& b, double p_exp, double r,
                          double tol = kOrderTol);

/// The left-hand side of the Furuta inequality.
template <Scalar T>
JPositive<T> furuta_lhs(const JPositive<T>& a, const JPositive<T>& b, double p_exp, double r);

}  // namespace jcone
