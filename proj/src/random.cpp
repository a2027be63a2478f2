#include "jcone/random.hpp"

#include <cmath>

namespace jcone {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

template <Scalar T>
Matrix<T> random_unitary(Index n, Rng& rng) {
  for (;;) {
    Matrix<T> g = random_matrix<T>(n, n, rng);
    bool ok = true;
    for (Index k = 0; k < n && ok; ++k) {
      for (int pass = 0; pass < 2; ++pass) {
        for (Index j = 0; j < k; ++j) {
          T dot{};
          for (Index i = 0; i < n; ++i) dot += conjugate(g(i, j)) * g(i, k);
          for (Index i = 0; i < n; ++i) g(i, k) -= g(i, j) * dot;
        }
      }
      double nrm = 0.0;
      for (Index i = 0; i < n; ++i) nrm += abs2(g(i, k));
      nrm = std::sqrt(nrm);
      if (nrm < 1e-8) {
        ok = false;
        break;
      }
      for (Index i = 0; i < n; ++i) g(i, k) = g(i, k) * (1.0 / nrm);
    }
    if (ok) return g;
  }
}

template <Scalar T>
JPositive<T> random_pj(const Signature& sig, std::uint64_t seed, double max_condition) {
  const Matrix<T> j = j_matrix<T>(sig);
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    const Matrix<T> g = random_matrix<T>(sig.n(), sig.n(), rng);
    if (abs_determinant(g) < 1e-6) continue;
    const Matrix<T> x = j_hermitian_part(g * j * sharp(g, sig), sig);
    // A nonzero determinant estimate does not guarantee the certificate
    // margin; near-singular draws are retried rather than rejected.
    const auto ev = eigenvalues(hermitian_part(j_left(sig, x)));
    if (ev.back() <= kPositivityTol * tol_scale(x)) continue;
    if (std::isfinite(max_condition) && ev.front() > max_condition * ev.back()) continue;
    return make_j_positive(x, sig);
  }
}

template <Scalar T>
Matrix<T> random_kj(const Signature& sig, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0));
  const Matrix<T> up = random_unitary<T>(sig.p, rng);
  const Matrix<T> uq = random_unitary<T>(sig.q, rng);
  return assemble_blocks(up, Matrix<T>(sig.p, sig.q), Matrix<T>(sig.q, sig.p), uq);
}

template <Scalar T>
Matrix<T> random_jhermitian(const Signature& sig, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0));
  return j_left(sig, random_hermitian<T>(sig.n(), rng));
}

#define JCONE_INSTANTIATE(T)                                         \
  template Matrix<T> random_unitary(Index, Rng&);                    \
  template JPositive<T> random_pj(const Signature&, std::uint64_t, double);  \
  template Matrix<T> random_kj(const Signature&, std::uint64_t);     \
  template Matrix<T> random_jhermitian(const Signature&, std::uint64_t);

JCONE_INSTANTIATE(double)
JCONE_INSTANTIATE(Complex)
JCONE_INSTANTIATE(Quaternion)
#undef JCONE_INSTANTIATE

}  // namespace jcone
