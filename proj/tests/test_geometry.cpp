#include <gtest/gtest.h>

#include <cmath>

#include "jcone/geometry.hpp"
#include "jcone/jcalc.hpp"
#include "jcone/random.hpp"
#include "test_util.hpp"

namespace jcone {
namespace {

using testing::complex_image;
using testing::EigenC;
using testing::eigen_hermitian_function;
using testing::eigen_near;
using testing::matrices_near;

constexpr Signature k11{1, 1};
const Signature kSignatures[] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 0}, {0, 2}};

template <typename T>
class GeometryAllFields : public ::testing::Test {};
using Fields = ::testing::Types<double, Complex, Quaternion>;
TYPED_TEST_SUITE(GeometryAllFields, Fields);

// P^{1/2} (P^{-1/2} Q P^{-1/2})^t P^{1/2}, entirely in Eigen.
EigenC classical_geodesic(const EigenC& p, const EigenC& q, double t) {
  const EigenC half = eigen_hermitian_function(p, [](double v) { return std::sqrt(v); });
  const EigenC inv_half = eigen_hermitian_function(p, [](double v) { return 1.0 / std::sqrt(v); });
  const EigenC inner = inv_half * q * inv_half;
  return half * eigen_hermitian_function(inner, [t](double v) { return std::pow(v, t); }) * half;
}

TEST(Metric, Examples) {
  const auto j = make_j_positive(j_matrix<double>(k11), k11);
  EXPECT_NEAR(metric_omega(j, j_matrix<double>(k11), j_matrix<double>(k11)), 2.0, 1e-15);
  EXPECT_THROW(metric_omega(j, MatrixR{{0.0, 1.0}, {1.0, 0.0}}, j_matrix<double>(k11)), Error);
}

TYPED_TEST(GeometryAllFields, MetricPositiveSymmetricInvariant) {
  using T = TypeParam;
  Rng rng(71);
  for (const Signature& s : kSignatures) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto p = random_pj<T>(s, seed, kSuiteMaxCondition);
      const Matrix<T> u = random_jhermitian<T>(s, seed + 1), v = random_jhermitian<T>(s, seed + 2);
      const double uv = metric_omega(p, u, v);
      EXPECT_NEAR(uv, metric_omega(p, v, u), 1e-10 * std::max(1.0, std::abs(uv)));
      EXPECT_GT(metric_omega(p, u, u), 0.0);
      const Matrix<T> g = random_matrix<T>(s.n(), s.n(), rng);
      const Matrix<T> gs = sharp(g, s);
      const auto gp = make_j_positive(j_hermitian_part(Matrix<T>(g * p.matrix() * gs), s), s);
      const double moved = metric_omega(gp, j_hermitian_part(Matrix<T>(g * u * gs), s),
                                        j_hermitian_part(Matrix<T>(g * v * gs), s));
      EXPECT_NEAR(moved, uv, 1e-7 * std::max(1.0, std::abs(uv)));
    }
  }
}

TEST(Geodesic, DiagonalExample) {
  const auto a = make_j_positive(MatrixR::diagonal({2.0, -3.0}), k11);
  const auto b = make_j_positive(MatrixR::diagonal({8.0, -27.0}), k11);
  EXPECT_TRUE(matrices_near(geodesic(a, b, 0.5).matrix(), MatrixR::diagonal({4.0, -9.0}), 1e-14));
  EXPECT_TRUE(matrices_near(geodesic(a, a, 0.3).matrix(), a.matrix(), 1e-14));
  EXPECT_NEAR(geodesic_distance(a, b), std::hypot(std::log(4.0), std::log(9.0)), 1e-13);
  EXPECT_NEAR(geodesic_distance(a, b), 2.59800, 5e-6);
  EXPECT_NEAR(geodesic_distance(a, a), 0.0, 1e-15);
}

TEST(Geodesic, SignatureMismatch) {
  const auto a = make_j_positive(MatrixR::diagonal({2.0, -3.0}), k11);
  const auto b = make_j_positive(MatrixR::diagonal({2.0, 3.0}), Signature{2, 0});
  try {
    geodesic(a, b, 0.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSignatureMismatch);
  }
  EXPECT_THROW(geodesic_distance(a, b), Error);
}

TYPED_TEST(GeometryAllFields, PullbackAgainstEigen) {
  using T = TypeParam;
  for (const Signature& s : kSignatures) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto a = random_pj<T>(s, seed, kSuiteMaxCondition);
      const auto b = random_pj<T>(s, seed + 50, kSuiteMaxCondition);
      const GeodesicPath<T> path(a, b);
      EXPECT_TRUE(matrices_near(path.sample(0.0).matrix(), a.matrix(), 1e-9));
      EXPECT_TRUE(matrices_near(path.sample(1.0).matrix(), b.matrix(), 1e-9));
      const EigenC ja = complex_image(j_left(s, a.matrix())), jb = complex_image(j_left(s, b.matrix()));
      for (double t : {0.1, 0.5, 0.9}) {
        EXPECT_TRUE(eigen_near(complex_image(j_left(s, path.sample(t).matrix())),
                               classical_geodesic(ja, jb, t), 1e-9));
      }
    }
  }
}

TYPED_TEST(GeometryAllFields, DistanceProperties) {
  using T = TypeParam;
  Rng rng(72);
  for (const Signature& s : kSignatures) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto a = random_pj<T>(s, seed, kSuiteMaxCondition);
      const auto b = random_pj<T>(s, seed + 50, kSuiteMaxCondition);
      const double d = geodesic_distance(a, b);
      EXPECT_NEAR(d, geodesic_distance(b, a), 1e-9 * std::max(1.0, d));
      const double t = rng.uniform(0.05, 0.95);
      const auto m = geodesic(a, b, t);
      EXPECT_NEAR(geodesic_distance(a, m), t * d, 1e-8 * std::max(1.0, d));
      EXPECT_NEAR(geodesic_distance(a, m) + geodesic_distance(m, b), d, 1e-8 * std::max(1.0, d));
      const Matrix<T> g = random_kj<T>(s, seed);
      auto move = [&](const JPositive<T>& x) {
        return make_j_positive(j_hermitian_part(Matrix<T>(g * x.matrix() * sharp(g, s)), s), s);
      };
      EXPECT_NEAR(geodesic_distance(move(a), move(b)), d, 1e-8 * std::max(1.0, d));
    }
  }
}

TYPED_TEST(GeometryAllFields, OdeResidual) {
  using T = TypeParam;
  Rng rng(73);
  int impostor_detected = 0, pairs = 0;
  for (const Signature& s : kSignatures) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto draw = [&](std::uint64_t k) {
        const Matrix<T> x = random_jhermitian<T>(s, k);
        return exp_j(Matrix<T>(x * (rng.uniform(0.2, 2.0) / frobenius_norm(x))), s);
      };
      const auto a = draw(seed), b = draw(seed + 100);
      const double scale = tol_scale(geodesic(a, b, 0.5).matrix());
      EXPECT_LE(geodesic_ode_residual(a, b, 0.5), 1e-5 * scale);
      EXPECT_LE(geodesic_ode_residual(a, a, 0.5), 1e-6);
      const Matrix<T> am = a.matrix(), bm = b.matrix();
      const double lin = curve_ode_residual<T>(
          [&](double t) { return Matrix<T>((1.0 - t) * am + t * bm); }, 0.5, 1e-4);
      impostor_detected += lin > 1e-2;
      ++pairs;
    }
  }
  EXPECT_GE(impostor_detected, 0.9 * pairs);
}

TEST(Geodesic, OdeStepValidation) {
  const auto a = make_j_positive(MatrixR::diagonal({2.0, -3.0}), k11);
  const auto b = make_j_positive(MatrixR::diagonal({8.0, -27.0}), k11);
  try {
    geodesic_ode_residual(a, b, 0.5, 1e-8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kStepTooSmall);
  }
  EXPECT_THROW(geodesic_ode_residual(a, b, 0.00001, 1e-4), Error);
}

}  // namespace
}  // namespace jcone
