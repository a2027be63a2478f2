#include "jcone/geometry.hpp"

#include <string>

namespace jcone {

template <Scalar T>
double metric_omega(const JPositive<T>& p, const Matrix<T>& u, const Matrix<T>& v) {
  const Signature& sig = p.signature();
  if (!is_j_hermitian(u, sig) || !is_j_hermitian(v, sig)) {
    throw Error(ErrorKind::kNotJHermitian, "tangent vectors must lie in p_J");
  }
  const Matrix<T> p_inv = inverse(p.matrix());
  return trd(p_inv * u * p_inv * v);
}

template <Scalar T>
GeodesicPath<T>::GeodesicPath(const JPositive<T>& a, const JPositive<T>& b)
    : a_(a), b_(b), a_half_(pow_j(a, 0.5).matrix()), inner_(a) {
  detail::require_same_signature(a, b);
  const Signature& sig = a.signature();
  const Matrix<T> a_inv_half = pow_j(a, -0.5).matrix();
  const Matrix<T> inner = bullet(bullet(a_inv_half, b.matrix(), sig), a_inv_half, sig);
  inner_ = make_j_positive(j_hermitian_part(inner, sig), sig);
}

template <Scalar T>
JPositive<T> GeodesicPath<T>::sample(double t) const {
  const Signature& sig = a_.signature();
  const Matrix<T> mid = pow_j(inner_, t).matrix();
  const Matrix<T> g = bullet(bullet(a_half_, mid, sig), a_half_, sig);
  return make_j_positive(j_hermitian_part(g, sig), sig);
}

template <Scalar T>
double curve_ode_residual(const std::function<Matrix<T>(double)>& curve, double t, double h) {
  if (!(h >= 1e-7)) {
    throw Error(ErrorKind::kStepTooSmall, "finite-difference step " + format_real(h));
  }
  const Matrix<T> prev = curve(t - h), here = curve(t), next = curve(t + h);
  const Matrix<T> second = (next - 2.0 * here + prev) * (1.0 / (h * h));
  const Matrix<T> first = (next - prev) * (0.5 / h);
  return frobenius_norm(second - first * inverse(here) * first);
}

template <Scalar T>
double geodesic_ode_residual(const JPositive<T>& a, const JPositive<T>& b, double t,
                             double h) {
  if (!(h >= 1e-7)) {
    throw Error(ErrorKind::kStepTooSmall, "finite-difference step " + format_real(h));
  }
  if (!(t > h && t < 1.0 - h)) {
    throw Error(ErrorKind::kInvalidArgument, "t must lie in (h, 1 - h)");
  }
  const GeodesicPath<T> path(a, b);
  return curve_ode_residual<T>([&path](double s) { return path.sample(s).matrix(); }, t, h);
}

template <Scalar T>
double geodesic_distance(const JPositive<T>& a, const JPositive<T>& b) {
  detail::require_same_signature(a, b);
  const Signature& sig = a.signature();
  const Matrix<T> ja = hermitian_part(j_left(sig, a.matrix()));
  const Matrix<T> jb = hermitian_part(j_left(sig, b.matrix()));
  const Matrix<T> ja_inv_half = mat_pow_pd(ja, -0.5);
  return frobenius_norm(mat_log_pd(hermitian_part(ja_inv_half * jb * ja_inv_half)));
}

#define JCONE_INSTANTIATE(T)                                                                  \
  template double metric_omega(const JPositive<T>&, const Matrix<T>&, const Matrix<T>&);      \
  template class GeodesicPath<T>;                                                             \
  template double curve_ode_residual(const std::function<Matrix<T>(double)>&, double, double); \
  template double geodesic_ode_residual(const JPositive<T>&, const JPositive<T>&, double,     \
                                        double);                                              \
  template double geodesic_distance(const JPositive<T>&, const JPositive<T>&);

JCONE_INSTANTIATE(double)
JCONE_INSTANTIATE(Complex)
JCONE_INSTANTIATE(Quaternion)
#undef JCONE_INSTANTIATE

}  // namespace jcone
