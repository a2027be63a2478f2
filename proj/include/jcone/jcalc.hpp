#pragma once

#include <utility>

#include "jcone/jstruct.hpp"

namespace jcone {

/// A * B := A J B. Associative, with J as the neutral element.
template <Scalar T>
Matrix<T> bullet(const Matrix<T>& a, const Matrix<T>& b, const Signature& sig);

/// J A^-1 J, the inverse for the bullet product.
template <Scalar T>
Matrix<T> bullet_inverse(const Matrix<T>& a, const Signature& sig);

/// [X, Y]_J = X * Y - Y * X.
template <Scalar T>
Matrix<T> bullet_commutator(const Matrix<T>& x, const Matrix<T>& y, const Signature& sig);

/// exp_J(X) = J exp(J X) for X in p_J.
template <Scalar T>
JPositive<T> exp_j(const Matrix<T>& x, const Signature& sig);

/// log_J(X) = J log(J X), the inverse of exp_J.
template <Scalar T>
Matrix<T> log_j(const JPositive<T>& x);

inline constexpr double kMaxPowerExponent = 32.0;

/// X^t_J = J (J X)^t. |t| > 32 is rejected with kInvalidArgument.
template <Scalar T>
JPositive<T> pow_j(const JPositive<T>& x, double t);

template <Scalar T>
struct BulletPolar {
  Matrix<T> k;       // unitary factor
  JPositive<T> p;    // J-positive factor, g = k * p
};

/// g = k * p with k unitary and p in P_J: p = J (g* g)^{1/2}, k = g (g* g)^{-1/2}.
template <Scalar T>
BulletPolar<T> polar_decompose_bullet(const Matrix<T>& g, const Signature& sig);

}  // namespace jcone
