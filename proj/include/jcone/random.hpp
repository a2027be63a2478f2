#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "jcone/jstruct.hpp"

namespace jcone {

/// Mixes a base seed with a stream counter (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t counter);

/// Explicit, value-semantics random source. Draw k of a generator called
/// with seed s uses Rng(derive_seed(s, k)).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  std::uint64_t bits() { return engine_(); }

  /// Independent standard normals in every real coordinate of the field.
  template <Scalar T>
  T normal_scalar() {
    std::array<double, ScalarTraits<T>::kRealDim> c{};
    for (auto& v : c) v = normal();
    return from_components<T>(c);
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

template <Scalar T>
Matrix<T> random_matrix(Index rows, Index cols, Rng& rng) {
  Matrix<T> m(rows, cols);
  for (auto& x : m.data()) x = rng.normal_scalar<T>();
  return m;
}

/// Gram-Schmidt on a Gaussian matrix (right scalar multiples over H).
template <Scalar T>
Matrix<T> random_unitary(Index n, Rng& rng);

template <Scalar T>
Matrix<T> random_hermitian(Index n, Rng& rng) {
  return hermitian_part(random_matrix<T>(n, n, rng));
}

/// G G* for an n x rank Gaussian G: positive semi-definite of the given rank.
template <Scalar T>
Matrix<T> random_psd(Index n, Index rank, Rng& rng) {
  const Matrix<T> g = random_matrix<T>(n, rank, rng);
  return hermitian_part(g * adjoint(g));
}

/// g J g^sharp for Gaussian g, retried while |det g| < 1e-6 or while the
/// condition number of J X exceeds `max_condition`.
template <Scalar T>
JPositive<T> random_pj(const Signature& sig, std::uint64_t seed,
                       double max_condition = std::numeric_limits<double>::infinity());

/// The condition cap used by the property suites.
inline constexpr double kSuiteMaxCondition = 1e4;

/// diag(U_p, U_q) with independent random unitary blocks.
template <Scalar T>
Matrix<T> random_kj(const Signature& sig, std::uint64_t seed);

/// J H for a random Hermitian H.
template <Scalar T>
Matrix<T> random_jhermitian(const Signature& sig, std::uint64_t seed);

}  // namespace jcone
