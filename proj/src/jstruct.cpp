#include "jcone/jstruct.hpp"

#include <charconv>

namespace jcone {

std::string to_string(const Signature& sig) {
  return std::to_string(sig.p) + "," + std::to_string(sig.q);
}

Signature parse_signature(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorKind::kParse, "signature must be 'p,q', got '" + s + "'");
  }
  auto parse = [&s](std::string_view part) {
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    Index v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw Error(ErrorKind::kParse, "signature must be 'p,q', got '" + s + "'");
    }
    return v;
  };
  const std::string_view view(s);
  Signature sig{parse(view.substr(0, comma)), parse(view.substr(comma + 1))};
  if (sig.n() == 0) throw Error(ErrorKind::kParse, "signature needs p + q >= 1");
  return sig;
}

template <Scalar T>
Matrix<T> j_left(const Signature& sig, Matrix<T> x) {
  if (x.rows() != sig.n()) throw Error(ErrorKind::kDimensionMismatch, "J X: row count");
  for (Index i = sig.p; i < x.rows(); ++i)
    for (Index j = 0; j < x.cols(); ++j) x(i, j) = -x(i, j);
  return x;
}

template <Scalar T>
Matrix<T> j_right(Matrix<T> x, const Signature& sig) {
  if (x.cols() != sig.n()) throw Error(ErrorKind::kDimensionMismatch, "X J: column count");
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = sig.p; j < x.cols(); ++j) x(i, j) = -x(i, j);
  return x;
}

template <Scalar T>
Matrix<T> sharp(const Matrix<T>& x, const Signature& sig) {
  detail::require_signature(x, sig);
  return j_right(j_left(sig, adjoint(x)), sig);
}

template <Scalar T>
bool is_j_hermitian(const Matrix<T>& x, const Signature& sig, double tol) {
  detail::require_signature(x, sig);
  return frobenius_norm(sharp(x, sig) - x) <= tol * tol_scale(x);
}

template <Scalar T>
bool is_in_u_j(const Matrix<T>& g, const Signature& sig, double tol) {
  detail::require_signature(g, sig);
  return distance(sharp(g, sig) * g, Matrix<T>::identity(sig.n())) <= tol * tol_scale(g);
}

template <Scalar T>
bool is_in_k_j(const Matrix<T>& g, const Signature& sig, double tol) {
  return is_in_u_j(g, sig, tol) &&
         distance(adjoint(g) * g, Matrix<T>::identity(sig.n())) <= tol * tol_scale(g);
}

template <Scalar T>
Matrix<T> j_hermitian_part(const Matrix<T>& x, const Signature& sig) {
  return 0.5 * (x + sharp(x, sig));
}

template <Scalar T>
Matrix<T> JHermitianBlocks<T>::assemble() const {
  return assemble_blocks(a_block, b_block, -adjoint(b_block), d_block);
}

template <Scalar T>
JHermitianBlocks<T> block_decompose(const Matrix<T>& h, const Signature& sig, double tol) {
  if (!is_j_hermitian(h, sig, tol)) {
    throw Error(ErrorKind::kNotJHermitian, "block decomposition needs H^sharp = H");
  }
  return {block(h, 0, 0, sig.p, sig.p), block(h, 0, sig.p, sig.p, sig.q),
          block(h, sig.p, sig.p, sig.q, sig.q)};
}

template <Scalar T>
JPositive<T> make_j_positive(const Matrix<T>& x, const Signature& sig, double tol) {
  detail::require_signature(x, sig);
  const double asym = frobenius_norm(sharp(x, sig) - x);
  if (asym > kHermitianTol * tol_scale(x)) {
    throw Error(ErrorKind::kNotJHermitian, "||X^sharp - X||_F = " + format_real(asym));
  }
  Matrix<T> sym = j_hermitian_part(x, sig);
  const auto ev = eigenvalues(hermitian_part(j_left(sig, sym)));
  const double scale = std::max(1.0, std::max(std::abs(ev.front()), std::abs(ev.back())));
  if (!(ev.back() > tol * scale)) {
    throw Error(ErrorKind::kNotJPositive, "lambda_min(JX) = " + format_real(ev.back()));
  }
  return JPositive<T>(std::move(sym), sig, ev.back());
}

template <Scalar T>
bool is_j_positive(const Matrix<T>& x, const Signature& sig, double tol) {
  try {
    make_j_positive(x, sig, tol);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kNotJHermitian || e.kind() == ErrorKind::kNotJPositive) {
      return false;
    }
    throw;
  }
}

template <Scalar T>
SchurVerdict schur_j_positive(const JHermitianBlocks<T>& h, double tol) {
  const Index p = h.a_block.rows(), q = h.d_block.rows();
  if (p == 0) {
    return q == 0 || is_positive_definite(-h.d_block, tol) ? SchurVerdict::kPositive
                                                           : SchurVerdict::kNotPositive;
  }
  const auto ev = eigenvalues(h.a_block);
  const double scale = std::max(1.0, std::max(std::abs(ev.front()), std::abs(ev.back())));
  if (ev.back() < -tol * scale) return SchurVerdict::kNotPositive;
  if (!(ev.back() > tol * scale)) return SchurVerdict::kIndeterminate;
  if (q == 0) return SchurVerdict::kPositive;
  const Matrix<T> schur =
      hermitian_part(-h.d_block - adjoint(h.b_block) * inverse(h.a_block) * h.b_block);
  return is_positive_definite(schur, tol) ? SchurVerdict::kPositive
                                          : SchurVerdict::kNotPositive;
}

template <Scalar T>
Matrix<T> phi_j(const Matrix<T>& x, const Signature& sig) {
  if (!is_j_hermitian(x, sig)) throw Error(ErrorKind::kNotJHermitian, "phi_J needs X in p_J");
  return j_left(sig, x);
}

template <Scalar T>
Matrix<T> phi_j_inv(const Matrix<T>& p, const Signature& sig) {
  detail::require_signature(p, sig);
  if (!is_hermitian(p)) throw Error(ErrorKind::kNotHermitian, "phi_J^-1 needs a Hermitian matrix");
  return j_left(sig, p);
}

template <Scalar T>
T j_inner(std::span<const T> x, std::span<const T> y, const Signature& sig) {
  if (x.size() != sig.n() || y.size() != sig.n()) {
    throw Error(ErrorKind::kDimensionMismatch, "B(x, y) needs vectors of length n");
  }
  T s{};
  for (Index i = 0; i < sig.n(); ++i) s += conjugate(x[i]) * y[i] * sig.sign(i);
  return s;
}

#define JCONE_INSTANTIATE(T)                                                               \
  template Matrix<T> j_left(const Signature&, Matrix<T>);                                  \
  template Matrix<T> j_right(Matrix<T>, const Signature&);                                 \
  template Matrix<T> sharp(const Matrix<T>&, const Signature&);                            \
  template bool is_j_hermitian(const Matrix<T>&, const Signature&, double);                \
  template bool is_in_u_j(const Matrix<T>&, const Signature&, double);                     \
  template bool is_in_k_j(const Matrix<T>&, const Signature&, double);                     \
  template Matrix<T> j_hermitian_part(const Matrix<T>&, const Signature&);                 \
  template struct JHermitianBlocks<T>;                                                     \
  template JHermitianBlocks<T> block_decompose(const Matrix<T>&, const Signature&, double); \
  template JPositive<T> make_j_positive(const Matrix<T>&, const Signature&, double);       \
  template bool is_j_positive(const Matrix<T>&, const Signature&, double);                 \
  template SchurVerdict schur_j_positive(const JHermitianBlocks<T>&, double);              \
  template Matrix<T> phi_j(const Matrix<T>&, const Signature&);                            \
  template Matrix<T> phi_j_inv(const Matrix<T>&, const Signature&);                        \
  template T j_inner(std::span<const T>, std::span<const T>, const Signature&);

JCONE_INSTANTIATE(double)
JCONE_INSTANTIATE(Complex)
JCONE_INSTANTIATE(Quaternion)
#undef JCONE_INSTANTIATE

}  // namespace jcone
