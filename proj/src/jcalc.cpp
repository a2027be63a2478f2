#include "jcone/jcalc.hpp"

#include <cmath>
#include <string>

namespace jcone {

template <Scalar T>
Matrix<T> bullet(const Matrix<T>& a, const Matrix<T>& b, const Signature& sig) {
  detail::require_signature(a, sig);
  detail::require_signature(b, sig);
  return j_right(a, sig) * b;
}

template <Scalar T>
Matrix<T> bullet_inverse(const Matrix<T>& a, const Signature& sig) {
  detail::require_signature(a, sig);
  return j_right(j_left(sig, inverse(a)), sig);
}

template <Scalar T>
Matrix<T> bullet_commutator(const Matrix<T>& x, const Matrix<T>& y, const Signature& sig) {
  return bullet(x, y, sig) - bullet(y, x, sig);
}

template <Scalar T>
JPositive<T> exp_j(const Matrix<T>& x, const Signature& sig) {
  detail::require_signature(x, sig);
  if (!is_j_hermitian(x, sig)) throw Error(ErrorKind::kNotJHermitian, "exp_J needs X in p_J");
  return make_j_positive(j_left(sig, mat_exp_h(hermitian_part(j_left(sig, x)))), sig);
}

template <Scalar T>
Matrix<T> log_j(const JPositive<T>& x) {
  const Signature& sig = x.signature();
  return j_left(sig, mat_log_pd(hermitian_part(j_left(sig, x.matrix()))));
}

template <Scalar T>
JPositive<T> pow_j(const JPositive<T>& x, double t) {
  if (!std::isfinite(t) || std::abs(t) > kMaxPowerExponent) {
    throw Error(ErrorKind::kInvalidArgument, "J-power exponent out of range: " + format_real(t));
  }
  const Signature& sig = x.signature();
  if (t == 1.0) return x;
  if (t == 0.0) return make_j_positive(j_matrix<T>(sig), sig);
  return make_j_positive(j_left(sig, mat_pow_pd(hermitian_part(j_left(sig, x.matrix())), t)),
                         sig);
}

template <Scalar T>
BulletPolar<T> polar_decompose_bullet(const Matrix<T>& g, const Signature& sig) {
  detail::require_signature(g, sig);
  const Matrix<T> gram = hermitian_part(adjoint(g) * g);
  const Matrix<T> root = mat_sqrt_pd(gram);
  return {g * inverse(root), make_j_positive(j_left(sig, root), sig)};
}

#define JCONE_INSTANTIATE(T)                                                          \
  template Matrix<T> bullet(const Matrix<T>&, const Matrix<T>&, const Signature&);    \
  template Matrix<T> bullet_inverse(const Matrix<T>&, const Signature&);              \
  template Matrix<T> bullet_commutator(const Matrix<T>&, const Matrix<T>&,            \
                                       const Signature&);                             \
  template JPositive<T> exp_j(const Matrix<T>&, const Signature&);                    \
  template Matrix<T> log_j(const JPositive<T>&);                                      \
  template JPositive<T> pow_j(const JPositive<T>&, double);                           \
  template BulletPolar<T> polar_decompose_bullet(const Matrix<T>&, const Signature&);

JCONE_INSTANTIATE(double)
JCONE_INSTANTIATE(Complex)
JCONE_INSTANTIATE(Quaternion)
#undef JCONE_INSTANTIATE

}  // namespace jcone
