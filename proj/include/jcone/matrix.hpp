#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "jcone/error.hpp"
#include "jcone/scalar.hpp"

namespace jcone {

using Index = std::size_t;

/// Dense row-major matrix over R, C or H.
template <Scalar T>
class Matrix {
 public:
  using value_type = T;
  static constexpr Field kField = ScalarTraits<T>::kField;

  Matrix() = default;
  Matrix(Index rows, Index cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(Index rows, Index cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorKind::kDimensionMismatch, "entry count does not match shape");
    }
  }
  /// Row-list construction, e.g. Matrix<double>{{1, 2}, {3, 4}}.
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(Index n) {
    Matrix m(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = T(1.0);
    return m;
  }
  static Matrix zero(Index n) { return Matrix(n, n); }
  static Matrix diagonal(std::span<const double> d) {
    Matrix m(d.size(), d.size());
    for (Index i = 0; i < d.size(); ++i) m(i, i) = T(d[i]);
    return m;
  }
  static Matrix diagonal(std::initializer_list<double> d) {
    return diagonal(std::span<const double>(d.begin(), d.size()));
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(Index i, Index j) { return data_[i * cols_ + j]; }
  const T& operator()(Index i, Index j) const { return data_[i * cols_ + j]; }

  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s) {
    for (auto& x : data_) x = x * s;
    return *this;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<T> data_;
};

using MatrixR = Matrix<double>;
using MatrixC = Matrix<Complex>;
using MatrixH = Matrix<Quaternion>;

template <Scalar T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorKind::kDimensionMismatch, "ragged row list");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

namespace detail {
template <Scalar T>
void require_same_shape(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, "operand shapes differ");
  }
}
}  // namespace detail

template <Scalar T>
Matrix<T>& Matrix<T>::operator+=(const Matrix& o) {
  detail::require_same_shape(*this, o);
  for (Index k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

template <Scalar T>
Matrix<T>& Matrix<T>::operator-=(const Matrix& o) {
  detail::require_same_shape(*this, o);
  for (Index k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

template <Scalar T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  a += b;
  return a;
}
template <Scalar T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  a -= b;
  return a;
}
template <Scalar T>
Matrix<T> operator-(Matrix<T> a) {
  a *= -1.0;
  return a;
}
template <Scalar T>
Matrix<T> operator*(double s, Matrix<T> a) {
  a *= s;
  return a;
}
template <Scalar T>
Matrix<T> operator*(Matrix<T> a, double s) {
  a *= s;
  return a;
}

/// Left scalar multiplication, entry-wise s * a_ij (order matters over H).
template <Scalar T>
Matrix<T> scale_left(const T& s, Matrix<T> a) {
  for (auto& x : a.data()) x = s * x;
  return a;
}

template <Scalar T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::kDimensionMismatch, "inner dimensions differ");
  }
  Matrix<T> c(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      for (Index j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

template <Scalar T>
Matrix<T> adjoint(const Matrix<T>& a) {
  Matrix<T> r(a.cols(), a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) r(j, i) = conjugate(a(i, j));
  }
  return r;
}

/// (X + X*) / 2.
template <Scalar T>
Matrix<T> hermitian_part(const Matrix<T>& x) {
  return 0.5 * (x + adjoint(x));
}

template <Scalar T>
double frobenius_norm(const Matrix<T>& a) {
  double s = 0.0;
  for (const auto& x : a.data()) s += abs2(x);
  return std::sqrt(s);
}

template <Scalar T>
double max_abs(const Matrix<T>& a) {
  double m = 0.0;
  for (const auto& x : a.data()) m = std::max(m, std::sqrt(abs2(x)));
  return m;
}

/// Reduced trace: real part of the ordinary trace, for every field.
template <Scalar T>
double trd(const Matrix<T>& a) {
  double s = 0.0;
  for (Index i = 0; i < std::min(a.rows(), a.cols()); ++i) s += real_part(a(i, i));
  return s;
}

template <Scalar T>
T trace(const Matrix<T>& a) {
  T s{};
  for (Index i = 0; i < std::min(a.rows(), a.cols()); ++i) s += a(i, i);
  return s;
}

/// max(1, ||X||_F), the scale used by every relative tolerance.
template <Scalar T>
double tol_scale(const Matrix<T>& a) {
  return std::max(1.0, frobenius_norm(a));
}

template <Scalar T>
double distance(const Matrix<T>& a, const Matrix<T>& b) {
  return frobenius_norm(a - b);
}

/// Gauss-Jordan inverse with partial pivoting. Throws kSingular when a pivot
/// falls below 1e-13 ||X||_F.
template <Scalar T>
Matrix<T> inverse(const Matrix<T>& x);

/// Product of pivot magnitudes from elimination; |det| over R and C, the
/// Study/Dieudonne determinant over H.
template <Scalar T>
double abs_determinant(const Matrix<T>& x);

/// Lower-triangular L with real positive diagonal and X = L L*. Throws
/// kNotPositive when a pivot is not positive.
template <Scalar T>
Matrix<T> cholesky_lower(const Matrix<T>& x);

/// Block matrix [[a, b], [c, d]].
template <Scalar T>
Matrix<T> assemble_blocks(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                          const Matrix<T>& d);

/// Sub-block of rows [r0, r0+nr) and columns [c0, c0+nc).
template <Scalar T>
Matrix<T> block(const Matrix<T>& x, Index r0, Index c0, Index nr, Index nc);

template <Scalar To, Scalar From>
Matrix<To> promote_matrix(const Matrix<From>& x) {
  Matrix<To> r(x.rows(), x.cols());
  for (Index i = 0; i < x.rows(); ++i) {
    for (Index j = 0; j < x.cols(); ++j) r(i, j) = promote_scalar<To>(x(i, j));
  }
  return r;
}

// Complex embedding of quaternions: q = z1 + z2 j  ->  [[z1, z2], [-conj z2, conj z1]].
MatrixC psi(const Quaternion& q);
/// Psi(A + B j) = [[A, B], [-conj B, conj A]] for an n x n quaternionic matrix.
MatrixC psi(const MatrixH& x);
/// J_{2n} = [[0, Id], [-Id, 0]].
MatrixC symplectic_unit(Index n);
/// ||M J_{2n} - J_{2n} conj(M)||_F, zero exactly on the image of psi.
double psi_image_residual(const MatrixC& m);
/// Reads A from the upper-left and B from the upper-right block. Throws
/// kNotInImage when the structural residual exceeds 1e-8 max(1, ||M||_F).
MatrixH psi_inverse(const MatrixC& m);

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m);

}  // namespace jcone
