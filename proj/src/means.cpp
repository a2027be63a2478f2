#include "jcone/means.hpp"

#include <cmath>
#include <string>

namespace jcone {

namespace {

void require_weight(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorKind::kWeightOutOfRange, "weight " + format_real(t) + " not in [0, 1]");
  }
}

template <Scalar T>
JPositive<T> combine(const JPositive<T>& a, double wa, const JPositive<T>& b, double wb) {
  const Signature& sig = a.signature();
  return make_j_positive(j_hermitian_part(wa * a.matrix() + wb * b.matrix(), sig), sig);
}

}  // namespace

template <Scalar T>
MeanResult<T> weighted_mean(const JPositive<T>& a, const JPositive<T>& b, double t) {
  detail::require_same_signature(a, b);
  require_weight(t);
  MeanResult<T> r{geodesic(a, b, t), std::nullopt, t};
  if (t == 0.5) r.riccati_residual = riccati_residual(r.mean.matrix(), a, b);
  return r;
}

template <Scalar T>
double riccati_residual(const Matrix<T>& x, const JPositive<T>& a, const JPositive<T>& b) {
  return frobenius_norm(x * inverse(a.matrix()) * x - b.matrix());
}

template <Scalar T>
JPositive<T> riccati_solve(const JPositive<T>& a, const JPositive<T>& b) {
  return weighted_mean(a, b, 0.5).mean;
}

template <Scalar T>
OrderVerdict maximality_check(const Matrix<T>& x, const JPositive<T>& a, const JPositive<T>& b,
                              double tol) {
  detail::require_same_signature(a, b);
  const Signature& sig = a.signature();
  detail::require_signature(x, sig);
  if (!is_j_hermitian(x, sig)) {
    throw Error(ErrorKind::kNotJHermitian, "maximality candidate must lie in p_J");
  }
  const Matrix<T> ja = hermitian_part(j_left(sig, a.matrix()));
  const Matrix<T> jb = hermitian_part(j_left(sig, b.matrix()));
  const Matrix<T> jx = hermitian_part(j_left(sig, x));
  const Matrix<T> blk = assemble_blocks(ja, jx, jx, jb);
  OrderVerdict v;
  v.margin = lambda_min(blk);
  v.scale = tol_scale(blk);
  v.holds = v.margin >= -tol * v.scale;
  return v;
}

template <Scalar T>
JPositive<T> harmonic_mean_j(const JPositive<T>& a, const JPositive<T>& b, double t) {
  detail::require_same_signature(a, b);
  require_weight(t);
  return pow_j(combine(pow_j(a, -1.0), 1.0 - t, pow_j(b, -1.0), t), -1.0);
}

template <Scalar T>
JPositive<T> arithmetic_mean_j(const JPositive<T>& a, const JPositive<T>& b, double t) {
  detail::require_same_signature(a, b);
  require_weight(t);
  return combine(a, 1.0 - t, b, t);
}

template <Scalar T>
JPositive<T> commuting_bullet_mean(const JPositive<T>& a, const JPositive<T>& b, double t) {
  detail::require_same_signature(a, b);
  require_weight(t);
  const Signature& sig = a.signature();
  const double comm = frobenius_norm(bullet_commutator(a.matrix(), b.matrix(), sig));
  const double scale = std::max(1.0, frobenius_norm(a.matrix()) * frobenius_norm(b.matrix()));
  if (comm > kCommutatorTol * scale) {
    throw Error(ErrorKind::kNotBulletCommuting, "||[A, B]_J||_F = " + format_real(comm));
  }
  const Matrix<T> m = bullet(pow_j(a, 1.0 - t).matrix(), pow_j(b, t).matrix(), sig);
  return make_j_positive(j_hermitian_part(m, sig), sig);
}

template <Scalar T>
ImplicationVerdict ando_hiai_check(const JPositive<T>& a, const JPositive<T>& b, double t,
                                   double r, double tol) {
  if (!(r >= 1.0) || !(t > 0.0 && t < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "Ando-Hiai needs r >= 1 and t in (0, 1)");
  }
  const Signature& sig = a.signature();
  const Matrix<T> j = j_matrix<T>(sig);
  ImplicationVerdict v;
  v.premise = j_leq(weighted_mean(a, b, t).mean.matrix(), j, sig, tol);
  if (!v.premise.holds) {
    v.vacuous = true;
    v.holds = true;
    return v;
  }
  v.conclusion = j_leq(weighted_mean(pow_j(a, r), pow_j(b, r), t).mean.matrix(), j, sig, tol);
  v.holds = v.conclusion.holds;
  return v;
}

template <Scalar T>
std::pair<JPositive<T>, JPositive<T>> normalize_ando_hiai_premise(const JPositive<T>& a,
                                                                  const JPositive<T>& b,
                                                                  double t, double margin) {
  const Signature& sig = a.signature();
  const Matrix<T> m = weighted_mean(a, b, t).mean.matrix();
  const double top = lambda_max(hermitian_part(j_left(sig, m)));
  const double mu = (1.0 - margin) / top;
  return {make_j_positive(mu * a.matrix(), sig), make_j_positive(mu * b.matrix(), sig)};
}

template <Scalar T>
JPositive<T> furuta_lhs(const JPositive<T>& a, const JPositive<T>& b, double p_exp, double r) {
  const Signature& sig = a.signature();
  const Matrix<T> a_half = pow_j(a, r / 2.0).matrix();
  const Matrix<T> inner = bullet(bullet(a_half, pow_j(b, p_exp).matrix(), sig), a_half, sig);
  return pow_j(make_j_positive(j_hermitian_part(inner, sig), sig), r / (r + p_exp));
}

template <Scalar T>
OrderVerdict furuta_check(const JPositive<T>& a, const JPositive<T>& b, double p_exp, double r,
                          double tol) {
  detail::require_same_signature(a, b);
  if (!(p_exp >= 0.0) || !(r >= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "Furuta needs p >= 0 and r >= 1");
  }
  const OrderVerdict premise = j_leq(b, a, tol);
  if (!premise.holds) {
    throw Error(ErrorKind::kPremiseViolated,
                "B <=_J A fails with margin " + format_real(premise.margin));
  }
  return j_leq(furuta_lhs(a, b, p_exp, r), pow_j(a, r), tol);
}

#define JCONE_INSTANTIATE(T)                                                                 \
  template MeanResult<T> weighted_mean(const JPositive<T>&, const JPositive<T>&, double);    \
  template double riccati_residual(const Matrix<T>&, const JPositive<T>&, const JPositive<T>&); \
  template JPositive<T> riccati_solve(const JPositive<T>&, const JPositive<T>&);             \
  template OrderVerdict maximality_check(const Matrix<T>&, const JPositive<T>&,              \
                                         const JPositive<T>&, double);                       \
  template JPositive<T> harmonic_mean_j(const JPositive<T>&, const JPositive<T>&, double);   \
  template JPositive<T> arithmetic_mean_j(const JPositive<T>&, const JPositive<T>&, double); \
  template JPositive<T> commuting_bullet_mean(const JPositive<T>&, const JPositive<T>&,      \
                                              double);                                       \
  template ImplicationVerdict ando_hiai_check(const JPositive<T>&, const JPositive<T>&,      \
                                              double, double, double);                       \
  template std::pair<JPositive<T>, JPositive<T>> normalize_ando_hiai_premise(                \
      const JPositive<T>&, const JPositive<T>&, double, double);                             \
  template JPositive<T> furuta_lhs(const JPositive<T>&, const JPositive<T>&, double, double); \
  template OrderVerdict furuta_check(const JPositive<T>&, const JPositive<T>&, double,       \
                                     double, double);

JCONE_INSTANTIATE(double)
JCONE_INSTANTIATE(Complex)
JCONE_INSTANTIATE(Quaternion)
#undef JCONE_INSTANTIATE

}  // namespace jcone
