#include "jcone/order.hpp"

#include <algorithm>

namespace jcone {

template <Scalar T>
OrderVerdict loewner_leq(const Matrix<T>& x, const Matrix<T>& y, double tol) {
  if (x.rows() != y.rows() || !x.is_square() || !y.is_square()) {
    throw Error(ErrorKind::kDimensionMismatch, "order comparison needs equal square shapes");
  }
  if (!is_hermitian(x) || !is_hermitian(y)) {
    throw Error(ErrorKind::kNotHermitian, "Loewner order needs Hermitian operands");
  }
  OrderVerdict v;
  v.margin = lambda_min(hermitian_part(y - x));
  v.scale = std::max({1.0, frobenius_norm(x), frobenius_norm(y)});
  v.holds = v.margin >= -tol * v.scale;
  return v;
}

template <Scalar T>
OrderVerdict j_leq(const Matrix<T>& x, const Matrix<T>& y, const Signature& sig, double tol) {
  detail::require_signature(x, sig);
  detail::require_signature(y, sig);
  if (!is_j_hermitian(x, sig) || !is_j_hermitian(y, sig)) {
    throw Error(ErrorKind::kNotJHermitian, "J-order needs J-Hermitian operands");
  }
  return loewner_leq(hermitian_part(j_left(sig, x)), hermitian_part(j_left(sig, y)), tol);
}

#define JCONE_INSTANTIATE(T)                                                     \
  template OrderVerdict loewner_leq(const Matrix<T>&, const Matrix<T>&, double); \
  template OrderVerdict j_leq(const Matrix<T>&, const Matrix<T>&, const Signature&, double);

JCONE_INSTANTIATE(double)
JCONE_INSTANTIATE(Complex)
JCONE_INSTANTIATE(Quaternion)
#undef JCONE_INSTANTIATE

}  // namespace jcone
