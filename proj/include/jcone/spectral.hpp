#pragma once

#include <functional>
#include <vector>

#include "jcone/matrix.hpp"

namespace jcone {

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPositivityTol = 1e-10;

/// X = U diag(eigenvalues) U* with U unitary (symplectic over H) and the
/// eigenvalues sorted in descending order.
template <Scalar T>
struct SpectralDecomposition {
  Matrix<T> unitary;
  std::vector<double> eigenvalues;

  Matrix<T> reconstruct() const;
};

/// ||X - X*||_F <= tol * max(1, ||X||_F).
template <Scalar T>
bool is_hermitian(const Matrix<T>& x, double tol = kHermitianTol);

/// Cyclic Jacobi for R and C. Quaternionic input is diagonalized through its
/// complex embedding; each embedded eigenvalue appears twice and one
/// eigenvector per pair is kept, orthogonalized against the partners of the
/// vectors already chosen, so the quaternionic U is unitary.
template <Scalar T>
SpectralDecomposition<T> hermitian_eig(const Matrix<T>& x);

template <Scalar T>
std::vector<double> eigenvalues(const Matrix<T>& x) {
  return hermitian_eig(x).eigenvalues;
}
template <Scalar T>
double lambda_min(const Matrix<T>& x);
template <Scalar T>
double lambda_max(const Matrix<T>& x);
/// Spectral norm of a Hermitian matrix.
template <Scalar T>
double hermitian_norm2(const Matrix<T>& x);

using RealFunction = std::function<double(double)>;

/// U f(Lambda) U*. Over H the function is evaluated on the complex embedding
/// and mapped back through psi_inverse.
template <Scalar T>
Matrix<T> matrix_function(const Matrix<T>& x, const RealFunction& f);

template <Scalar T>
Matrix<T> mat_exp_h(const Matrix<T>& x);
/// The following reject any eigenvalue <= kPositivityTol * max(1, ||X||_2)
/// with kNotPositive.
template <Scalar T>
Matrix<T> mat_log_pd(const Matrix<T>& x);
template <Scalar T>
Matrix<T> mat_pow_pd(const Matrix<T>& x, double t);
template <Scalar T>
Matrix<T> mat_sqrt_pd(const Matrix<T>& x);

/// lambda_min(X) > tol * max(1, ||X||_2).
template <Scalar T>
bool is_positive_definite(const Matrix<T>& x, double tol = kPositivityTol);

}  // namespace jcone

namespace jcone {

/// exp of an arbitrary square matrix by scaling and squaring of the Taylor
/// series. Unlike mat_exp_h it accepts non-Hermitian input, e.g. the
/// skew-Hermitian elements of p_J.
template <Scalar T>
Matrix<T> mat_exp_general(const Matrix<T>& x);

}  // namespace jcone
