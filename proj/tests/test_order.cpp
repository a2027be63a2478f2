#include <gtest/gtest.h>

#include "jcone/jcalc.hpp"
#include "jcone/order.hpp"
#include "jcone/random.hpp"
#include "test_util.hpp"

namespace jcone {
namespace {

constexpr Signature k11{1, 1};

template <typename T>
class OrderAllFields : public ::testing::Test {};
using Fields = ::testing::Types<double, Complex, Quaternion>;
TYPED_TEST_SUITE(OrderAllFields, Fields);

TEST(Loewner, Examples) {
  const auto v = loewner_leq(MatrixR::identity(2), MatrixR(2.0 * MatrixR::identity(2)));
  EXPECT_TRUE(v.holds);
  EXPECT_NEAR(v.margin, 1.0, 1e-15);
  EXPECT_FALSE(loewner_leq(MatrixR::diagonal({1.0, 3.0}), MatrixR::diagonal({2.0, 2.0})).holds);
  const MatrixR x{{2.0, 1.0}, {1.0, 5.0}};
  const auto same = loewner_leq(x, x);
  EXPECT_TRUE(same.holds);
  EXPECT_EQ(same.margin, 0.0);
  EXPECT_THROW(loewner_leq(MatrixR{{0.0, 1.0}, {0.0, 0.0}}, x), Error);
  EXPECT_THROW(loewner_leq(MatrixR::identity(3), x), Error);
}

TEST(JOrder, Examples) {
  const MatrixR j = j_matrix<double>(k11);
  EXPECT_TRUE(j_leq(j, MatrixR(2.0 * j), k11).holds);
  const auto v = j_leq(MatrixR::diagonal({2.0, -3.0}), MatrixR::diagonal({3.0, -4.0}), k11);
  EXPECT_TRUE(v.holds);
  EXPECT_NEAR(v.margin, 1.0, 1e-15);
  EXPECT_FALSE(j_leq(MatrixR::diagonal({3.0, -4.0}), MatrixR::diagonal({2.0, -3.0}), k11).holds);
  const MatrixR a{{2.0, 1.0}, {-1.0, -2.0}};
  EXPECT_TRUE(j_leq(a, a, k11).holds);
  try {
    j_leq(MatrixR{{0.0, 1.0}, {1.0, 0.0}}, a, k11);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotJHermitian);
  }
}

TEST(JOrder, ToleranceIsOneSided) {
  const MatrixR j = j_matrix<double>(k11);
  const MatrixR slightly_less = j - MatrixR(1e-12 * MatrixR::identity(2));
  // J Y - J X = -1e-12 J has lambda_min -1e-12, within the default slack.
  EXPECT_TRUE(j_leq(j, slightly_less, k11).holds);
  EXPECT_FALSE(j_leq(j, MatrixR(0.5 * j), k11).holds);
}

// Comparable pairs Y = X + J P with P positive semi-definite.
template <Scalar T>
std::pair<JPositive<T>, JPositive<T>> comparable(const Signature& s, std::uint64_t seed) {
  const auto x = random_pj<T>(s, seed, kSuiteMaxCondition);
  Rng rng(seed + 1);
  const Matrix<T> bump = j_left(s, random_psd<T>(s.n(), 1 + seed % s.n(), rng));
  return {x, make_j_positive(Matrix<T>(x.matrix() + bump), s)};
}

TYPED_TEST(OrderAllFields, PowerMonotonicityOnUnitInterval) {
  using T = TypeParam;
  for (const Signature s : {Signature{1, 1}, Signature{2, 1}, Signature{2, 2}}) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto [x, y] = comparable<T>(s, seed);
      ASSERT_TRUE(j_leq(x, y).holds);
      for (double t : {0.25, 0.5, 0.75, 1.0}) EXPECT_TRUE(j_leq(pow_j(x, t), pow_j(y, t)).holds);
    }
  }
}

TEST(JOrder, SquareIsNotMonotone) {
  // Classical pair P <= Q with P^2 <= Q^2 failing, carried over by J.
  const MatrixR px{{1.0, 1.0}, {1.0, 1.01}}, py{{2.0, 1.0}, {1.0, 1.01}};
  const auto x = make_j_positive(j_left(k11, px), k11), y = make_j_positive(j_left(k11, py), k11);
  EXPECT_TRUE(j_leq(x, y).holds);
  EXPECT_FALSE(j_leq(pow_j(x, 2.0), pow_j(y, 2.0)).holds);
}

TYPED_TEST(OrderAllFields, CongruenceAndInverse) {
  using T = TypeParam;
  Rng rng(61);
  for (const Signature s : {Signature{1, 1}, Signature{1, 2}, Signature{2, 2}}) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto [x, y] = comparable<T>(s, seed);
      const Matrix<T> c = random_matrix<T>(s.n(), s.n(), rng);
      const Matrix<T> cs = sharp(c, s);
      EXPECT_TRUE(j_leq(j_hermitian_part(Matrix<T>(cs * x.matrix() * c), s),
                        j_hermitian_part(Matrix<T>(cs * y.matrix() * c), s), s)
                      .holds);
      EXPECT_TRUE(j_leq(j_hermitian_part(inverse(y.matrix()), s),
                        j_hermitian_part(inverse(x.matrix()), s), s)
                      .holds);
    }
  }
}

}  // namespace
}  // namespace jcone
