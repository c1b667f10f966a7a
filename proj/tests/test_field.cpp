#include <gtest/gtest.h>

#include "unitcodes/field.hpp"

using namespace unitcodes;

TEST(Field, PrimeArithmetic) {
  const Field f = Field::gf(7);
  EXPECT_EQ(f.add(5, 4), 2u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.neg(2), 5u);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.pow(3, 6), 1u);
}

TEST(Field, Gf8UsesXCubedPlusXPlusOne) {
  const Field f = Field::gf(2, 3);
  EXPECT_EQ(f.modulus(), (std::vector<Rep>{1, 1, 0, 1}));
  // x * x^2 = x^3 = x + 1
  EXPECT_EQ(f.mul(2, 4), 3u);
  EXPECT_EQ(f.add(5, 3), 6u);
  EXPECT_EQ(f.multiplicative_order(2), 7u);
}

TEST(Field, Gf9AndGf25) {
  const Field f9 = Field::gf(3, 2);
  // x^2 = -1 = 2
  EXPECT_EQ(f9.mul(3, 3), 2u);
  const Field f25 = Field::gf(5, 2);
  // x^2 = -2 = 3
  EXPECT_EQ(f25.mul(5, 5), 3u);
  EXPECT_EQ(f25.multiplicative_order(f25.primitive_element()), 24u);
}

TEST(Field, PrimitiveElementGeneratesGroup) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 4}, {3, 3}, {17, 1}, {2, 8}, {7, 2}}) {
    const Field f = Field::gf(p, m);
    EXPECT_EQ(f.multiplicative_order(f.primitive_element()), f.order() - 1) << f.literal();
  }
}

TEST(Field, ElementOfOrder) {
  const Field f = Field::gf(17);
  const auto w = element_of_order(f, 8);
  EXPECT_EQ(f.multiplicative_order(w.rep()), 8u);
  EXPECT_EQ(element_of_order(Field::gf(2, 3), 7).rep(), 2u);
  EXPECT_THROW(element_of_order(f, 5), std::domain_error);
}

TEST(Field, SqrtMinusOne) {
  EXPECT_EQ(sqrt_minus_one(Field::gf(5))->rep(), 2u);
  EXPECT_EQ(sqrt_minus_one(Field::gf(13))->rep(), 5u);
  EXPECT_FALSE(sqrt_minus_one(Field::gf(7)));
  EXPECT_FALSE(sqrt_minus_one(Field::gf(3)));
  EXPECT_EQ(sqrt_minus_one(Field::gf(2))->rep(), 1u);
}

TEST(Field, QuadraticExtensionEmbedsAsSubfield) {
  const auto ext = quadratic_extension(Field::gf(7));
  EXPECT_EQ(ext.extended.order(), 49u);
  EXPECT_TRUE(sqrt_minus_one(ext.extended));
  const Field& b = ext.base;
  const Field& e = ext.extended;
  for (Rep a = 0; a < 7; ++a)
    for (Rep c = 0; c < 7; ++c) {
      EXPECT_EQ(ext.embed(b.add(a, c)), e.add(ext.embed(a), ext.embed(c)));
      EXPECT_EQ(ext.embed(b.mul(a, c)), e.mul(ext.embed(a), ext.embed(c)));
    }
  EXPECT_THROW(quadratic_extension(Field::gf(5)), std::domain_error);
}

TEST(Field, ExtensionOfNonPrimeBase) {
  const auto ext = quadratic_extension(Field::gf(3, 3));
  EXPECT_EQ(ext.extended.order(), 729u);
  for (Rep a = 0; a < 27; ++a)
    for (Rep c = 0; c < 27; c += 5) EXPECT_EQ(ext.embed(ext.base.mul(a, c)), ext.extended.mul(ext.embed(a), ext.embed(c)));
}

TEST(Field, ParseAndLiteralRoundTrip) {
  EXPECT_EQ(Field::parse("gf(5)"), Field::gf(5));
  EXPECT_EQ(Field::parse(" GF( 2^3 ) "), Field::gf(2, 3));
  EXPECT_EQ(Field::gf(2, 3).literal(), "gf(2^3)");
  const Field other = Field::gf(2, 3, {1, 0, 1, 1});
  EXPECT_NE(other, Field::gf(2, 3));
  EXPECT_EQ(other.literal(), "gf(2^3; modulus=[1,0,1,1])");
  EXPECT_EQ(Field::parse(other.literal()), other);
}

TEST(Field, Rejections) {
  EXPECT_THROW(Field::gf(6), std::invalid_argument);
  EXPECT_THROW(Field::gf(2, 3, {1, 0, 0, 1}), std::invalid_argument);  // x^3+1 = (x+1)(x^2+x+1)
  EXPECT_THROW(Field::gf(2, 17), std::invalid_argument);
  EXPECT_THROW(Field::parse("gf(4"), std::invalid_argument);
  EXPECT_THROW(Field::parse("gf(x)"), std::invalid_argument);
}

TEST(Field, ElementOperators) {
  const Field f = Field::gf(11);
  const auto a = f.element(7), b = f.element(9);
  EXPECT_EQ((a + b).rep(), 5u);
  EXPECT_EQ((a - b).rep(), 9u);
  EXPECT_EQ((a * b).rep(), 8u);
  EXPECT_EQ(((a / b) * b).rep(), 7u);
  EXPECT_EQ((-a).rep(), 4u);
  EXPECT_EQ(a.pow(10).rep(), 1u);
}

TEST(Field, AxiomsExhaustiveSmall) {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 2}, {2, 4}, {5, 1}, {2, 5}}) {
    const Field f = Field::gf(p, m);
    const Rep q = f.order();
    for (Rep a = 0; a < q; ++a) {
      if (a) {
        ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
      }
      for (Rep b = 0; b < q; ++b) {
        ASSERT_EQ(f.sub(f.add(a, b), b), a);
        for (Rep c = 0; c < q; ++c) ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST(Field, LargeFieldWithoutAddTable) {
  const Field f = Field::gf(2, 11);
  EXPECT_EQ(f.order(), 2048u);
  for (Rep a = 1; a < f.order(); a += 97) {
    EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    EXPECT_EQ(f.add(a, a), 0u);
  }
}
