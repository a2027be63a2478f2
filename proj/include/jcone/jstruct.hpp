#pragma once

#include <string>

#include "jcone/matrix.hpp"
#include "jcone/spectral.hpp"

namespace jcone {

/// The form Id_{p,q} = diag(Id_p, -Id_q) on n = p + q coordinates.
struct Signature {
  Index p = 0;
  Index q = 0;

  constexpr Index n() const { return p + q; }
  constexpr double sign(Index i) const { return i < p ? 1.0 : -1.0; }
  friend constexpr bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& sig);
/// Parses "p,q".
Signature parse_signature(const std::string& s);

template <Scalar T>
Matrix<T> j_matrix(const Signature& sig) {
  Matrix<T> j(sig.n(), sig.n());
  for (Index i = 0; i < sig.n(); ++i) j(i, i) = T(sig.sign(i));
  return j;
}

/// J X, computed by negating the last q rows.
template <Scalar T>
Matrix<T> j_left(const Signature& sig, Matrix<T> x);
/// X J, computed by negating the last q columns.
template <Scalar T>
Matrix<T> j_right(Matrix<T> x, const Signature& sig);

/// X^sharp = J X* J.
template <Scalar T>
Matrix<T> sharp(const Matrix<T>& x, const Signature& sig);

template <Scalar T>
bool is_j_hermitian(const Matrix<T>& x, const Signature& sig, double tol = kHermitianTol);
/// g^sharp g = Id.
template <Scalar T>
bool is_in_u_j(const Matrix<T>& g, const Signature& sig, double tol = kHermitianTol);
/// K_J = U_J intersected with the unitary group.
template <Scalar T>
bool is_in_k_j(const Matrix<T>& g, const Signature& sig, double tol = kHermitianTol);

/// (X + X^sharp) / 2.
template <Scalar T>
Matrix<T> j_hermitian_part(const Matrix<T>& x, const Signature& sig);

/// H = [[A, B], [-B*, D]] with A (p x p) and D (q x q) Hermitian.
template <Scalar T>
struct JHermitianBlocks {
  Matrix<T> a_block;
  Matrix<T> b_block;
  Matrix<T> d_block;

  Matrix<T> assemble() const;
};

template <Scalar T>
JHermitianBlocks<T> block_decompose(const Matrix<T>& h, const Signature& sig,
                                    double tol = kHermitianTol);

/// A certified element of the cone P_J: a J-Hermitian matrix whose image JX
/// is positive definite. The only way to obtain one is through
/// make_j_positive (or the operations that return one), so downstream code
/// never re-validates.
template <Scalar T>
class JPositive {
 public:
  const Matrix<T>& matrix() const { return matrix_; }
  const Signature& signature() const { return signature_; }
  /// lambda_min(J X) at certification time.
  double certificate() const { return lambda_min_; }
  Index n() const { return signature_.n(); }

  template <Scalar U>
  friend JPositive<U> make_j_positive(const Matrix<U>& x, const Signature& sig, double tol);

 private:
  JPositive(Matrix<T> m, Signature sig, double lm)
      : matrix_(std::move(m)), signature_(sig), lambda_min_(lm) {}

  Matrix<T> matrix_;
  Signature signature_;
  double lambda_min_ = 0.0;
};

/// Certifies X as J-positive. Throws kNotJHermitian when
/// ||X^sharp - X||_F > 1e-10 max(1, ||X||_F) and kNotJPositive when
/// lambda_min(JX) <= tol max(1, ||JX||_2). The stored matrix is the
/// J-Hermitian part of X.
template <Scalar T>
JPositive<T> make_j_positive(const Matrix<T>& x, const Signature& sig,
                             double tol = kPositivityTol);

template <Scalar T>
bool is_j_positive(const Matrix<T>& x, const Signature& sig, double tol = kPositivityTol);

enum class SchurVerdict { kPositive, kNotPositive, kIndeterminate };

/// A > 0 and (-D) - B* A^-1 B > 0. Indeterminate when A is not safely
/// invertible (lambda_min(A) <= tol * scale).
template <Scalar T>
SchurVerdict schur_j_positive(const JHermitianBlocks<T>& h, double tol = kPositivityTol);

/// Phi_J(X) = J X, from p_J onto the Hermitian matrices.
template <Scalar T>
Matrix<T> phi_j(const Matrix<T>& x, const Signature& sig);
/// Phi_J^{-1}(P) = J P.
template <Scalar T>
Matrix<T> phi_j_inv(const Matrix<T>& p, const Signature& sig);

/// B(x, y) = x* J y for column vectors.
template <Scalar T>
T j_inner(std::span<const T> x, std::span<const T> y, const Signature& sig);

namespace detail {
template <Scalar T>
void require_signature(const Matrix<T>& x, const Signature& sig) {
  if (sig.n() == 0) throw Error(ErrorKind::kDimensionMismatch, "signature with p + q = 0");
  if (!x.is_square() || x.rows() != sig.n()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "matrix is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                    " but signature " + to_string(sig) + " needs n = " + std::to_string(sig.n()));
  }
}
template <Scalar T>
void require_same_signature(const JPositive<T>& a, const JPositive<T>& b) {
  if (!(a.signature() == b.signature())) {
    throw Error(ErrorKind::kSignatureMismatch,
                to_string(a.signature()) + " vs " + to_string(b.signature()));
  }
}
}  // namespace detail

}  // namespace jcone
