#include "jcone/matrix.hpp"

#include <ostream>
#include <string>

namespace jcone {

namespace {

// Row-reduces `work` to the identity, applying the same left multiplications
// to `rhs` when given. Returns the product of pivot magnitudes, or 0 when a
// pivot drops below the singularity threshold.
template <Scalar T>
double gauss_jordan(Matrix<T>& work, Matrix<T>* rhs) {
  const Index n = work.rows();
  const double threshold = 1e-13 * frobenius_norm(work);
  double det = 1.0;
  for (Index k = 0; k < n; ++k) {
    Index piv = k;
    double best = abs2(work(k, k));
    for (Index i = k + 1; i < n; ++i) {
      if (abs2(work(i, k)) > best) {
        best = abs2(work(i, k));
        piv = i;
      }
    }
    const double mag = std::sqrt(best);
    if (!(mag > threshold) || mag == 0.0) return 0.0;
    det *= mag;
    if (piv != k) {
      for (Index j = 0; j < n; ++j) std::swap(work(k, j), work(piv, j));
      if (rhs) {
        for (Index j = 0; j < n; ++j) std::swap((*rhs)(k, j), (*rhs)(piv, j));
      }
    }
    const T inv = ScalarTraits<T>::inverse(work(k, k));
    for (Index j = 0; j < n; ++j) work(k, j) = inv * work(k, j);
    if (rhs) {
      for (Index j = 0; j < n; ++j) (*rhs)(k, j) = inv * (*rhs)(k, j);
    }
    for (Index i = 0; i < n; ++i) {
      if (i == k) continue;
      const T f = work(i, k);
      if (abs2(f) == 0.0) continue;
      for (Index j = 0; j < n; ++j) work(i, j) -= f * work(k, j);
      if (rhs) {
        for (Index j = 0; j < n; ++j) (*rhs)(i, j) -= f * (*rhs)(k, j);
      }
    }
  }
  return det;
}

}  // namespace

template <Scalar T>
Matrix<T> inverse(const Matrix<T>& x) {
  if (!x.is_square()) throw Error(ErrorKind::kDimensionMismatch, "inverse of non-square matrix");
  Matrix<T> work = x;
  Matrix<T> inv = Matrix<T>::identity(x.rows());
  if (x.rows() > 0 && gauss_jordan(work, &inv) == 0.0) {
    throw Error(ErrorKind::kSingular, "pivot below 1e-13 ||X||");
  }
  return inv;
}

template <Scalar T>
double abs_determinant(const Matrix<T>& x) {
  if (!x.is_square()) throw Error(ErrorKind::kDimensionMismatch, "determinant of non-square matrix");
  Matrix<T> work = x;
  return gauss_jordan<T>(work, nullptr);
}

template <Scalar T>
Matrix<T> cholesky_lower(const Matrix<T>& x) {
  if (!x.is_square()) throw Error(ErrorKind::kDimensionMismatch, "Cholesky of non-square matrix");
  const Index n = x.rows();
  Matrix<T> l(n, n);
  for (Index j = 0; j < n; ++j) {
    double diag = real_part(x(j, j));
    for (Index k = 0; k < j; ++k) diag -= abs2(l(j, k));
    if (!(diag > 0.0)) throw Error(ErrorKind::kNotPositive, "Cholesky pivot is not positive");
    const double ljj = std::sqrt(diag);
    l(j, j) = T(ljj);
    for (Index i = j + 1; i < n; ++i) {
      T s = x(i, j);
      for (Index k = 0; k < j; ++k) s -= l(i, k) * conjugate(l(j, k));
      l(i, j) = s * (1.0 / ljj);
    }
  }
  return l;
}

template <Scalar T>
Matrix<T> assemble_blocks(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c,
                          const Matrix<T>& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
      b.cols() != d.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, "block shapes do not tile");
  }
  const Index r0 = a.rows(), c0 = a.cols();
  Matrix<T> m(r0 + c.rows(), c0 + b.cols());
  auto put = [&m](const Matrix<T>& s, Index ro, Index co) {
    for (Index i = 0; i < s.rows(); ++i)
      for (Index j = 0; j < s.cols(); ++j) m(ro + i, co + j) = s(i, j);
  };
  put(a, 0, 0);
  put(b, 0, c0);
  put(c, r0, 0);
  put(d, r0, c0);
  return m;
}

template <Scalar T>
Matrix<T> block(const Matrix<T>& x, Index r0, Index c0, Index nr, Index nc) {
  if (r0 + nr > x.rows() || c0 + nc > x.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, "block out of range");
  }
  Matrix<T> m(nr, nc);
  for (Index i = 0; i < nr; ++i)
    for (Index j = 0; j < nc; ++j) m(i, j) = x(r0 + i, c0 + j);
  return m;
}

MatrixC psi(const Quaternion& q) {
  return MatrixC{{q.z1(), q.z2()}, {-std::conj(q.z2()), std::conj(q.z1())}};
}

MatrixC psi(const MatrixH& x) {
  const Index n = x.rows(), m = x.cols();
  MatrixC r(2 * n, 2 * m);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m; ++j) {
      const Complex z1 = x(i, j).z1(), z2 = x(i, j).z2();
      r(i, j) = z1;
      r(i, m + j) = z2;
      r(n + i, j) = -std::conj(z2);
      r(n + i, m + j) = std::conj(z1);
    }
  }
  return r;
}

MatrixC symplectic_unit(Index n) {
  MatrixC j(2 * n, 2 * n);
  for (Index i = 0; i < n; ++i) {
    j(i, n + i) = 1.0;
    j(n + i, i) = -1.0;
  }
  return j;
}

double psi_image_residual(const MatrixC& m) {
  if (!m.is_square() || m.rows() % 2 != 0) {
    throw Error(ErrorKind::kDimensionMismatch, "psi image needs an even square matrix");
  }
  MatrixC bar = m;
  for (auto& z : bar.data()) z = std::conj(z);
  const MatrixC j = symplectic_unit(m.rows() / 2);
  return frobenius_norm(m * j - j * bar);
}

MatrixH psi_inverse(const MatrixC& m) {
  const double res = psi_image_residual(m);
  if (res > 1e-8 * tol_scale(m)) {
    throw Error(ErrorKind::kNotInImage, "structural residual " + format_real(res));
  }
  const Index n = m.rows() / 2;
  MatrixH x(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) x(i, j) = Quaternion::from_pair(m(i, j), m(i, n + j));
  return x;
}

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  os << "[";
  for (Index i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (Index j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
  }
  return os << "]";
}

#define JCONE_INSTANTIATE(T)                                                        \
  template Matrix<T> inverse(const Matrix<T>&);                                     \
  template double abs_determinant(const Matrix<T>&);                                \
  template Matrix<T> cholesky_lower(const Matrix<T>&);                              \
  template Matrix<T> assemble_blocks(const Matrix<T>&, const Matrix<T>&,            \
                                     const Matrix<T>&, const Matrix<T>&);           \
  template Matrix<T> block(const Matrix<T>&, Index, Index, Index, Index);           \
  template std::ostream& operator<<(std::ostream&, const Matrix<T>&);

JCONE_INSTANTIATE(double)
JCONE_INSTANTIATE(Complex)
JCONE_INSTANTIATE(Quaternion)
#undef JCONE_INSTANTIATE

}  // namespace jcone
