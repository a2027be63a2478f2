#pragma once

#include "jcone/jstruct.hpp"

namespace jcone {

inline constexpr double kOrderTol = 1e-9;

/// Verdict of X <= Y. `margin` is lambda_min(Y - X) in the relevant order;
/// `holds` is margin >= -tol * scale with scale = max(1, ||X||_F, ||Y||_F).
struct OrderVerdict {
  bool holds = false;
  double margin = 0.0;
  double scale = 1.0;
};

/// Classical Loewner order on Hermitian matrices: X <= Y iff Y - X >= 0.
template <Scalar T>
OrderVerdict loewner_leq(const Matrix<T>& x, const Matrix<T>& y, double tol = kOrderTol);

/// X <=_J Y iff J X <= J Y.
template <Scalar T>
OrderVerdict j_leq(const Matrix<T>& x, const Matrix<T>& y, const Signature& sig,
                   double tol = kOrderTol);

template <Scalar T>
OrderVerdict j_leq(const JPositive<T>& x, const JPositive<T>& y, double tol = kOrderTol) {
  detail::require_same_signature(x, y);
  return j_leq(x.matrix(), y.matrix(), x.signature(), tol);
}

}  // namespace jcone
