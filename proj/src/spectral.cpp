#include "jcone/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace jcone {

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kOffDiagonalTol = 1e-14;

template <Scalar T>
double off_diagonal_norm(const Matrix<T>& a) {
  double s = 0.0;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (i != j) s += abs2(a(i, j));
  return std::sqrt(s);
}

template <Scalar T>
void require_hermitian(const Matrix<T>& x) {
  if (!x.is_square()) throw Error(ErrorKind::kDimensionMismatch, "matrix is not square");
  if (!is_hermitian(x)) {
    throw Error(ErrorKind::kNotHermitian,
                "||X - X*||_F = " + format_real(frobenius_norm(x - adjoint(x))));
  }
}

// Cyclic Jacobi on a Hermitian matrix over R or C. Each rotation first turns
// a_pq real with the phase diag(1, conj(e)) and then applies the classical
// real rotation, so the combined 2x2 unitary is
//   [[c, s], [-s conj(e), c conj(e)]].
template <Scalar T>
SpectralDecomposition<T> jacobi(const Matrix<T>& x) {
  const Index n = x.rows();
  Matrix<T> a = hermitian_part(x);
  Matrix<T> v = Matrix<T>::identity(n);
  const double target = kOffDiagonalTol * frobenius_norm(a);

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) > target; ++sweep) {
    for (Index p = 0; p + 1 < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const T apq = a(p, q);
        const double h = std::sqrt(abs2(apq));
        if (h == 0.0) continue;
        const T e = apq / h;
        const double theta = (real_part(a(q, q)) - real_part(a(p, p))) / (2.0 * h);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const T ce = conjugate(e);
        const T gpp = T(c), gpq = T(s), gqp = -s * ce, gqq = c * ce;

        for (Index k = 0; k < n; ++k) {
          const T akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (Index k = 0; k < n; ++k) {
          const T apk = a(p, k), aqk = a(q, k);
          a(p, k) = conjugate(gpp) * apk + conjugate(gqp) * aqk;
          a(q, k) = conjugate(gpq) * apk + conjugate(gqq) * aqk;
        }
        a(p, q) = T{};
        a(q, p) = T{};
        a(p, p) = T(real_part(a(p, p)));
        a(q, q) = T(real_part(a(q, q)));
        for (Index k = 0; k < n; ++k) {
          const T vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }

  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&a](Index i, Index j) {
    return real_part(a(i, i)) > real_part(a(j, j));
  });
  SpectralDecomposition<T> out{Matrix<T>(n, n), std::vector<double>(n)};
  for (Index k = 0; k < n; ++k) {
    out.eigenvalues[k] = real_part(a(order[k], order[k]));
    for (Index i = 0; i < n; ++i) out.unitary(i, k) = v(i, order[k]);
  }
  return out;
}

SpectralDecomposition<Quaternion> quaternion_eig(const MatrixH& x) {
  const Index n = x.rows();
  const auto embedded = jacobi(psi(x));
  const MatrixC& v = embedded.unitary;

  // Orthonormal complex vectors chosen so far, each followed by its partner
  // [-conj y; conj x], which spans the same eigenvalue.
  std::vector<std::vector<Complex>> chosen;
  SpectralDecomposition<Quaternion> out{MatrixH(n, n), {}};
  for (Index k = 0; k < 2 * n && out.eigenvalues.size() < n; ++k) {
    std::vector<Complex> w(2 * n);
    for (Index i = 0; i < 2 * n; ++i) w[i] = v(i, k);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : chosen) {
        Complex dot = 0.0;
        for (Index i = 0; i < 2 * n; ++i) dot += std::conj(u[i]) * w[i];
        for (Index i = 0; i < 2 * n; ++i) w[i] -= dot * u[i];
      }
    }
    double nrm = 0.0;
    for (const auto& z : w) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    if (nrm < 0.5) continue;
    for (auto& z : w) z /= nrm;
    std::vector<Complex> partner(2 * n);
    for (Index i = 0; i < n; ++i) {
      partner[i] = -std::conj(w[n + i]);
      partner[n + i] = std::conj(w[i]);
    }
    const Index col = out.eigenvalues.size();
    for (Index i = 0; i < n; ++i) {
      out.unitary(i, col) = Quaternion::from_pair(w[i], -std::conj(w[n + i]));
    }
    out.eigenvalues.push_back(embedded.eigenvalues[k]);
    chosen.push_back(std::move(w));
    chosen.push_back(std::move(partner));
  }
  if (out.eigenvalues.size() != n) {
    throw Error(ErrorKind::kNotHermitian, "embedded spectrum does not pair up");
  }
  return out;
}

template <Scalar T>
Matrix<T> apply_spectral(const SpectralDecomposition<T>& d, const RealFunction& f) {
  const Index n = d.eigenvalues.size();
  Matrix<T> scaled = d.unitary;
  for (Index j = 0; j < n; ++j) {
    const double fj = f(d.eigenvalues[j]);
    for (Index i = 0; i < n; ++i) scaled(i, j) = scaled(i, j) * fj;
  }
  return hermitian_part(scaled * adjoint(d.unitary));
}

template <Scalar T>
Matrix<T> positive_function(const Matrix<T>& x, const RealFunction& f, const char* name) {
  require_hermitian(x);
  if constexpr (std::is_same_v<T, Quaternion>) {
    // Positivity is checked on the embedded spectrum, which has the same
    // values as the quaternionic one.
    const MatrixC m = psi(x);
    const auto d = jacobi(m);
    const double scale = std::max(1.0, std::max(std::abs(d.eigenvalues.front()),
                                                std::abs(d.eigenvalues.back())));
    if (!(d.eigenvalues.back() > kPositivityTol * scale)) {
      throw Error(ErrorKind::kNotPositive,
                  std::string(name) + ": lambda_min = " + format_real(d.eigenvalues.back()));
    }
    return hermitian_part(psi_inverse(apply_spectral(d, f)));
  } else {
    const auto d = hermitian_eig(x);
    const double scale = std::max(1.0, std::max(std::abs(d.eigenvalues.front()),
                                                std::abs(d.eigenvalues.back())));
    if (!(d.eigenvalues.back() > kPositivityTol * scale)) {
      throw Error(ErrorKind::kNotPositive,
                  std::string(name) + ": lambda_min = " + format_real(d.eigenvalues.back()));
    }
    return apply_spectral(d, f);
  }
}

}  // namespace

template <Scalar T>
Matrix<T> SpectralDecomposition<T>::reconstruct() const {
  return apply_spectral(*this, [](double v) { return v; });
}

template <Scalar T>
bool is_hermitian(const Matrix<T>& x, double tol) {
  if (!x.is_square()) return false;
  return frobenius_norm(x - adjoint(x)) <= tol * tol_scale(x);
}

template <Scalar T>
SpectralDecomposition<T> hermitian_eig(const Matrix<T>& x) {
  require_hermitian(x);
  if constexpr (std::is_same_v<T, Quaternion>) {
    return quaternion_eig(hermitian_part(x));
  } else {
    return jacobi(x);
  }
}

template <Scalar T>
double lambda_min(const Matrix<T>& x) {
  const auto ev = eigenvalues(x);
  return ev.empty() ? 0.0 : ev.back();
}

template <Scalar T>
double lambda_max(const Matrix<T>& x) {
  const auto ev = eigenvalues(x);
  return ev.empty() ? 0.0 : ev.front();
}

template <Scalar T>
double hermitian_norm2(const Matrix<T>& x) {
  const auto ev = eigenvalues(x);
  return ev.empty() ? 0.0 : std::max(std::abs(ev.front()), std::abs(ev.back()));
}

template <Scalar T>
Matrix<T> matrix_function(const Matrix<T>& x, const RealFunction& f) {
  require_hermitian(x);
  if constexpr (std::is_same_v<T, Quaternion>) {
    return hermitian_part(psi_inverse(apply_spectral(jacobi(psi(x)), f)));
  } else {
    return apply_spectral(hermitian_eig(x), f);
  }
}

template <Scalar T>
Matrix<T> mat_exp_h(const Matrix<T>& x) {
  return matrix_function(x, [](double v) { return std::exp(v); });
}

template <Scalar T>
Matrix<T> mat_log_pd(const Matrix<T>& x) {
  return positive_function(x, [](double v) { return std::log(v); }, "log");
}

template <Scalar T>
Matrix<T> mat_pow_pd(const Matrix<T>& x, double t) {
  return positive_function(x, [t](double v) { return std::pow(v, t); }, "pow");
}

template <Scalar T>
Matrix<T> mat_sqrt_pd(const Matrix<T>& x) {
  return positive_function(x, [](double v) { return std::sqrt(v); }, "sqrt");
}

template <Scalar T>
bool is_positive_definite(const Matrix<T>& x, double tol) {
  const auto ev = eigenvalues(x);
  if (ev.empty()) return true;
  const double scale = std::max(1.0, std::max(std::abs(ev.front()), std::abs(ev.back())));
  return ev.back() > tol * scale;
}

template <Scalar T>
Matrix<T> mat_exp_general(const Matrix<T>& x) {
  if (!x.is_square()) throw Error(ErrorKind::kDimensionMismatch, "exp of non-square matrix");
  const Index n = x.rows();
  const double norm = frobenius_norm(x);
  int squarings = 0;
  if (norm > 0.25) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  const Matrix<T> scaled = x * std::ldexp(1.0, -squarings);

  Matrix<T> sum = Matrix<T>::identity(n);
  Matrix<T> term = Matrix<T>::identity(n);
  for (int k = 1; k <= 24; ++k) {
    term = term * scaled * (1.0 / k);
    sum += term;
    if (frobenius_norm(term) <= 1e-18 * frobenius_norm(sum)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

#define JCONE_INSTANTIATE(T)                                                       \
  template struct SpectralDecomposition<T>;                                        \
  template bool is_hermitian(const Matrix<T>&, double);                            \
  template SpectralDecomposition<T> hermitian_eig(const Matrix<T>&);               \
  template double lambda_min(const Matrix<T>&);                                    \
  template double lambda_max(const Matrix<T>&);                                    \
  template double hermitian_norm2(const Matrix<T>&);                               \
  template Matrix<T> matrix_function(const Matrix<T>&, const RealFunction&);       \
  template Matrix<T> mat_exp_h(const Matrix<T>&);                                  \
  template Matrix<T> mat_log_pd(const Matrix<T>&);                                 \
  template Matrix<T> mat_pow_pd(const Matrix<T>&, double);                         \
  template Matrix<T> mat_sqrt_pd(const Matrix<T>&);                                \
  template bool is_positive_definite(const Matrix<T>&, double);                    \
  template Matrix<T> mat_exp_general(const Matrix<T>&);

JCONE_INSTANTIATE(double)
JCONE_INSTANTIATE(Complex)
JCONE_INSTANTIATE(Quaternion)
#undef JCONE_INSTANTIATE

}  // namespace jcone
