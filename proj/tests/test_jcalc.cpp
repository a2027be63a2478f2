#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "jcone/jcalc.hpp"
#include "jcone/random.hpp"
#include "test_util.hpp"

namespace jcone {
namespace {

using testing::complex_image;
using testing::eigen_hermitian_function;
using testing::eigen_near;
using testing::matrices_near;

constexpr Signature k11{1, 1};
const Signature kSignatures[] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 0}, {0, 2}};

template <typename T>
class JCalcAllFields : public ::testing::Test {};
using Fields = ::testing::Types<double, Complex, Quaternion>;
TYPED_TEST_SUITE(JCalcAllFields, Fields);

TEST(Bullet, Examples) {
  const MatrixR j = j_matrix<double>(k11);
  const MatrixR a{{2.0, 1.0}, {-1.0, -2.0}}, b{{3.0, 1.0}, {-1.0, -1.0}};
  EXPECT_EQ(bullet(j, a, k11), a);
  EXPECT_EQ(bullet(a, j, k11), a);
  EXPECT_EQ(bullet(MatrixR::diagonal({2.0, -3.0}), MatrixR::diagonal({8.0, -27.0}), k11),
            MatrixR::diagonal({16.0, -81.0}));
  EXPECT_EQ(bullet_inverse(j, k11), j);
  EXPECT_TRUE(matrices_near(bullet_inverse(MatrixR::diagonal({2.0, -3.0}), k11),
                            MatrixR::diagonal({0.5, -1.0 / 3.0}), 1e-15));
  // a and b commute for the ordinary product but not for the bullet product.
  EXPECT_TRUE(matrices_near(MatrixR(a * b), MatrixR(b * a), 1e-15));
  EXPECT_GT(frobenius_norm(bullet_commutator(a, b, k11)), 1.0);
  EXPECT_EQ(frobenius_norm(bullet_commutator(a, a, k11)), 0.0);
  EXPECT_EQ(frobenius_norm(bullet_commutator(j, a, k11)), 0.0);
  EXPECT_THROW(bullet(MatrixR::identity(3), MatrixR::identity(3), k11), Error);
  EXPECT_THROW(bullet_inverse(MatrixR(2, 2), k11), Error);
}

TYPED_TEST(JCalcAllFields, BulletAlgebra) {
  using T = TypeParam;
  Rng rng(51);
  for (const Signature& s : kSignatures) {
    const Index n = s.n();
    const Matrix<T> a = random_matrix<T>(n, n, rng), b = random_matrix<T>(n, n, rng),
                    c = random_matrix<T>(n, n, rng);
    const Matrix<T> j = j_matrix<T>(s);
    EXPECT_TRUE(matrices_near(bullet(bullet(a, b, s), c, s), bullet(a, bullet(b, c, s), s), 1e-13));
    EXPECT_TRUE(matrices_near(bullet(a, bullet_inverse(a, s), s), j, 1e-9));
    EXPECT_TRUE(matrices_near(bullet(bullet_inverse(a, s), a, s), j, 1e-9));
    const Matrix<T> comm = bullet_commutator(a, b, s);
    EXPECT_TRUE(matrices_near(comm, Matrix<T>(-bullet_commutator(b, a, s)), 0.0));
  }
}

TEST(ExpJ, InverseExample) {
  const Complex i(0.0, 1.0);
  const MatrixC x{{0.0, i}, {i, 0.0}};
  const double ch = std::cosh(1.0), sh = std::sinh(1.0);
  const MatrixC h = exp_j(x, k11).matrix();
  EXPECT_TRUE(matrices_near(h, MatrixC{{ch, i * sh}, {i * sh, -ch}}, 1e-14));
  const MatrixC h_inv = inverse(h);
  const MatrixC neg = exp_j(MatrixC(-x), k11).matrix();
  const MatrixC expect_inv{{ch, i * sh}, {i * sh, -ch}};
  const MatrixC expect_neg{{ch, -i * sh}, {-i * sh, -ch}};
  for (Index r = 0; r < 2; ++r) {
    for (Index c = 0; c < 2; ++c) {
      EXPECT_LE(std::abs(h_inv(r, c) - expect_inv(r, c)), 1e-12);
      EXPECT_LE(std::abs(neg(r, c) - expect_neg(r, c)), 1e-12);
    }
  }
}

TEST(ExpJ, DiagonalAndZero) {
  EXPECT_TRUE(matrices_near(exp_j(MatrixR(2, 2), k11).matrix(), j_matrix<double>(k11), 1e-15));
  const MatrixR x = MatrixR::diagonal({std::log(2.0), -std::log(3.0)});
  EXPECT_TRUE(matrices_near(exp_j(x, k11).matrix(), MatrixR::diagonal({2.0, -3.0}), 1e-14));
  EXPECT_TRUE(matrices_near(log_j(make_j_positive(MatrixR::diagonal({2.0, -3.0}), k11)), x, 1e-15));
  EXPECT_TRUE(matrices_near(log_j(make_j_positive(j_matrix<double>(k11), k11)), MatrixR(2, 2), 0.0));
  EXPECT_THROW(exp_j(MatrixR{{0.0, 1.0}, {1.0, 0.0}}, k11), Error);
}

TEST(ExpJ, NonInjectivityWitness) {
  const Complex w(0.0, 2.0 * std::numbers::pi);
  const MatrixC x{{0.0, w}, {w, 0.0}};
  EXPECT_TRUE(is_j_hermitian(x, k11));
  EXPECT_GT(frobenius_norm(x), 1.0);
  EXPECT_TRUE(matrices_near(mat_exp_general(x), MatrixC::identity(2), 1e-10));
  EXPECT_TRUE(matrices_near(mat_exp_general(MatrixC(2, 2)), MatrixC::identity(2), 1e-15));
}

TYPED_TEST(JCalcAllFields, ExpLogAgainstEigen) {
  using T = TypeParam;
  for (const Signature& s : kSignatures) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Matrix<T> x = random_jhermitian<T>(s, seed);
      const auto h = exp_j(x, s);
      // J exp(JX), evaluated by Eigen on the complex image.
      const auto jx = complex_image(j_left(s, x));
      const testing::EigenC expected = complex_image(j_matrix<T>(s)) *
                            eigen_hermitian_function(jx, [](double v) { return std::exp(v); });
      EXPECT_TRUE(eigen_near(complex_image(h.matrix()), expected, 1e-10));
      EXPECT_TRUE(matrices_near(log_j(h), x, 1e-9));
      EXPECT_TRUE(is_j_hermitian(log_j(h), s));
      // exp_J(X)^-1 = exp(-JX) J.
      EXPECT_TRUE(matrices_near(inverse(h.matrix()),
                                j_right(mat_exp_general(Matrix<T>(-j_left(s, x))), s), 1e-10));
    }
  }
}

TYPED_TEST(JCalcAllFields, PowerLaws) {
  using T = TypeParam;
  for (const Signature& s : kSignatures) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto x = random_pj<T>(s, seed, 30.0);
      const Matrix<T> j = j_matrix<T>(s);
      EXPECT_EQ(pow_j(x, 0.0).matrix(), j);
      EXPECT_EQ(pow_j(x, 1.0).matrix(), x.matrix());
      EXPECT_TRUE(matrices_near(pow_j(pow_j(x, 0.5), 2.0).matrix(), x.matrix(), 1e-9));
      EXPECT_TRUE(matrices_near(pow_j(pow_j(x, 0.7), -1.3).matrix(), pow_j(x, -0.91).matrix(), 1e-9));
      EXPECT_TRUE(matrices_near(log_j(pow_j(x, 1.7)), Matrix<T>(1.7 * log_j(x)), 1e-9));
      const auto x_inv = make_j_positive(inverse(x.matrix()), s);
      EXPECT_TRUE(matrices_near(pow_j(x_inv, 0.4).matrix(), inverse(pow_j(x, 0.4).matrix()), 1e-9));
      EXPECT_TRUE(matrices_near(bullet(pow_j(x, 0.3).matrix(), pow_j(x, 0.9).matrix(), s),
                                pow_j(x, 1.2).matrix(), 1e-9));
      EXPECT_TRUE(matrices_near(bullet(pow_j(x, 0.8).matrix(), pow_j(x, -0.8).matrix(), s), j, 1e-9));
      // The definition, against Eigen: X^t_J = J (JX)^t.
      const testing::EigenC expected = complex_image(j) * eigen_hermitian_function(
          complex_image(j_left(s, x.matrix())), [](double v) { return std::pow(v, 0.37); });
      EXPECT_TRUE(eigen_near(complex_image(pow_j(x, 0.37).matrix()), expected, 1e-10));
    }
  }
}

TEST(PowJ, Examples) {
  const auto x = make_j_positive(MatrixR::diagonal({16.0, -81.0}), k11);
  EXPECT_TRUE(matrices_near(pow_j(x, 0.5).matrix(), MatrixR::diagonal({4.0, -9.0}), 1e-14));
  const auto j = make_j_positive(j_matrix<double>(k11), k11);
  EXPECT_TRUE(matrices_near(pow_j(j, 7.0).matrix(), j_matrix<double>(k11), 1e-15));
  EXPECT_THROW(pow_j(x, 40.0), Error);
  EXPECT_THROW(pow_j(x, std::nan("")), Error);
}

TYPED_TEST(JCalcAllFields, KJCongruenceOfPowers) {
  using T = TypeParam;
  for (const Signature& s : kSignatures) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Matrix<T> g = random_kj<T>(s, seed);
      const auto x = random_pj<T>(s, seed + 100, kSuiteMaxCondition);
      const auto gx = make_j_positive(j_hermitian_part(Matrix<T>(g * x.matrix() * sharp(g, s)), s), s);
      for (double t : {-1.0, 0.3, 0.5, 2.0}) {
        EXPECT_TRUE(matrices_near(pow_j(gx, t).matrix(),
                                  Matrix<T>(g * pow_j(x, t).matrix() * sharp(g, s)), 1e-9));
      }
    }
  }
}

TYPED_TEST(JCalcAllFields, BulletCommutingPowers) {
  using T = TypeParam;
  for (const Signature& s : kSignatures) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto seed_x = random_pj<T>(s, seed, 30.0);
      const auto x = pow_j(seed_x, 0.6), y = pow_j(seed_x, -1.1);
      EXPECT_LE(frobenius_norm(bullet_commutator(x.matrix(), y.matrix(), s)),
                1e-9 * tol_scale(x.matrix()) * tol_scale(y.matrix()));
      const auto xy = make_j_positive(j_hermitian_part(bullet(x.matrix(), y.matrix(), s), s), s);
      EXPECT_TRUE(matrices_near(pow_j(xy, 1.4).matrix(),
                                bullet(pow_j(x, 1.4).matrix(), pow_j(y, 1.4).matrix(), s), 1e-9));
    }
  }
}

TEST(GenericInverseInequality, MostDrawsDiffer) {
  int differ = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const MatrixC x = random_jhermitian<Complex>(k11, seed);
    differ += distance(inverse(exp_j(x, k11).matrix()), exp_j(MatrixC(-x), k11).matrix()) > 1e-6;
  }
  EXPECT_GE(differ, 180);
}

TYPED_TEST(JCalcAllFields, PolarDecomposition) {
  using T = TypeParam;
  Rng rng(52);
  for (const Signature& s : kSignatures) {
    const Index n = s.n();
    const Matrix<T> g = random_matrix<T>(n, n, rng);
    const auto kp = polar_decompose_bullet(g, s);
    EXPECT_TRUE(matrices_near(Matrix<T>(adjoint(kp.k) * kp.k), Matrix<T>::identity(n), 1e-10));
    EXPECT_LE(distance(bullet(kp.k, kp.p.matrix(), s), g), 1e-9 * frobenius_norm(g));
    // Unitary input has trivial positive part.
    const Matrix<T> u = random_unitary<T>(n, rng);
    EXPECT_TRUE(matrices_near(polar_decompose_bullet(u, s).p.matrix(), j_matrix<T>(s), 1e-10));
  }
  const auto id = polar_decompose_bullet(MatrixR::identity(2), k11);
  EXPECT_TRUE(matrices_near(id.k, MatrixR::identity(2), 1e-15));
  EXPECT_TRUE(matrices_near(id.p.matrix(), j_matrix<double>(k11), 1e-15));
  EXPECT_THROW(polar_decompose_bullet(MatrixR(2, 2), k11), Error);
}

}  // namespace
}  // namespace jcone
