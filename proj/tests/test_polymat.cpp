#include <gtest/gtest.h>

#include <random>

#include "unitcodes/polymat.hpp"

using namespace unitcodes;

TEST(Poly, Arithmetic) {
  const Field f = Field::gf(2);
  // (1 + z)^2 = 1 + z^2
  EXPECT_EQ(poly::mul(f, {1, 1}, {1, 1}), (Poly{1, 0, 1}));
  EXPECT_EQ(poly::add(f, {1, 1}, {1, 1}), Poly{});
  const Field f5 = Field::gf(5);
  const auto [q, r] = poly::divmod(f5, {1, 0, 0, 1}, {1, 1});
  // z^3 + 1 = (z + 1)(z^2 - z + 1)
  EXPECT_TRUE(r.empty());
  EXPECT_EQ(q, (Poly{1, 4, 1}));
  EXPECT_EQ(poly::degree({}), -1);
}

TEST(PolyMat, FromCoeffsAndDegrees) {
  const Field f = Field::gf(3);
  const auto p = PolyMat::from_coeffs({Mat::from_ints(f, {{1, 0}, {0, 1}}), Mat::from_ints(f, {{0, 2}, {0, 0}})});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.row_degree(0), 1);
  EXPECT_EQ(p.row_degree(1), 0);
  EXPECT_EQ(p(0, 1), (Poly{0, 2}));
  EXPECT_EQ(p.coeff(1), Mat::from_ints(f, {{0, 2}, {0, 0}}));
  EXPECT_EQ(p.coeff(5), Mat(f, 2, 2));
}

TEST(PolyMat, ProductMatchesCoefficientConvolution) {
  std::mt19937_64 rng(2);
  const Field f = Field::gf(7);
  auto rnd = [&](std::size_t r, std::size_t c) {
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Rep>(rng() % 7);
    return m;
  };
  const std::vector<Mat> a{rnd(2, 3), rnd(2, 3)}, b{rnd(3, 2), rnd(3, 2), rnd(3, 2)};
  const PolyMat prod = PolyMat::from_coeffs(a) * PolyMat::from_coeffs(b);
  for (std::size_t k = 0; k < 4; ++k) {
    Mat want(f, 2, 2);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (k >= i && k - i < b.size()) want = want + a[i] * b[k - i];
    EXPECT_EQ(prod.coeff(k), want);
  }
}

TEST(PolyMat, ReversedIsZInverseShift) {
  const Field f = Field::gf(2);
  const auto p = PolyMat::from_coeffs({Mat::from_ints(f, {{1, 0}}), Mat::from_ints(f, {{0, 1}})});
  const auto r = reversed(p, 1);
  EXPECT_EQ(r.coeff(0), Mat::from_ints(f, {{0, 1}}));
  EXPECT_EQ(r.coeff(1), Mat::from_ints(f, {{1, 0}}));
  EXPECT_EQ(reversed(p, 3).degree(), 3);
}

TEST(PolyMat, RankOverRationalFunctions) {
  const Field f = Field::gf(2);
  // rows (1, z) and (z, z^2) are dependent over F(z)
  PolyMat p(f, 2, 2);
  p(0, 0) = {1};
  p(0, 1) = {0, 1};
  p(1, 0) = {0, 1};
  p(1, 1) = {0, 0, 1};
  EXPECT_EQ(rank(p), 1u);
  p(1, 1) = {1};
  EXPECT_EQ(rank(p), 2u);
}

TEST(PolyMat, RightInverse) {
  const Field f = Field::gf(2);
  // (1+z, z) has inverse (1, 1)^T
  PolyMat g(f, 1, 2);
  g(0, 0) = {1, 1};
  g(0, 1) = {0, 1};
  const auto r = right_inverse(g);
  ASSERT_TRUE(r);
  EXPECT_EQ(g * *r, PolyMat::identity(f, 1));
  // (1+z, 1+z) has none
  g(0, 1) = {1, 1};
  EXPECT_FALSE(right_inverse(g));
  // (z, z^2) has none either: a polynomial inverse needs gcd 1, not a power of z
  g(0, 0) = {0, 1};
  g(0, 1) = {0, 0, 1};
  EXPECT_FALSE(right_inverse(g));
}

TEST(PolyMat, RightInverseRandomUnimodularRows) {
  std::mt19937_64 rng(4);
  const Field f = Field::gf(3);
  for (int t = 0; t < 20; ++t) {
    // (I_2 | random) is always right invertible
    PolyMat g(f, 2, 4);
    g(0, 0) = {1};
    g(1, 1) = {1};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 2; j < 4; ++j) {
        Poly p{static_cast<Rep>(rng() % 3), static_cast<Rep>(rng() % 3), static_cast<Rep>(rng() % 3)};
        poly::trim(p);
        g(i, j) = p;
      }
    const auto r = right_inverse(g);
    ASSERT_TRUE(r);
    EXPECT_EQ(g * *r, PolyMat::identity(f, 2));
  }
}
