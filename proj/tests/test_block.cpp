#include <gtest/gtest.h>

#include <random>

#include "unitcodes/block.hpp"
#include "unitcodes/named.hpp"
#include "unitcodes/scheme.hpp"

using namespace unitcodes;

namespace {

// Plain enumeration of every message, for cross-checking.
std::size_t naive_min_distance(const Mat& g) {
  const Field& f = g.field();
  const std::size_t r = g.rows(), n = g.cols();
  std::size_t count = 1;
  for (std::size_t i = 0; i < r; ++i) count *= f.order();
  std::size_t best = n + 1;
  std::vector<Rep> msg(r), word(n);
  for (std::size_t code = 1; code < count; ++code) {
    std::size_t rest = code;
    for (auto& x : msg) {
      x = static_cast<Rep>(rest % f.order());
      rest /= f.order();
    }
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(msg[i], g(i, j)));
    best = std::min(best, weight(word.data(), n));
  }
  return best;
}

}  // namespace

TEST(Block, HammingDistance) {
  const auto c = derive_block_code(hamming_unit().scheme, {0, 1, 2, 3});
  EXPECT_EQ(min_distance(c), 3u);
  // the complement rows K give a [7,3,3] code
  EXPECT_EQ(min_distance(derive_block_code(hamming_unit().scheme, {4, 5, 6})), 3u);
}

TEST(Block, GrayEnumerationMatchesNaive) {
  std::mt19937_64 rng(21);
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    const Field f = Field::gf(p, m);
    for (int t = 0; t < 25; ++t) {
      const std::size_t n = 4 + rng() % 5, r = 1 + rng() % 3;
      Mat g(f, r, n);
      do {
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < n; ++j) g(i, j) = static_cast<Rep>(rng() % f.order());
      } while (rank(g) < r);
      ASSERT_EQ(min_distance(BlockCode::from_generator(g)), naive_min_distance(g)) << f.literal();
    }
  }
}

TEST(Block, ThreadCountDoesNotChangeDistance) {
  const auto c = derive_block_code(hadamard12_unit(Field::gf(5)).scheme, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(min_distance(c, Budget{1 << 26, 1}), 6u);
  EXPECT_EQ(min_distance(c, Budget{1 << 26, 4}), 6u);
}

TEST(Block, BudgetRefusal) {
  const auto c = derive_block_code(hamming_unit().scheme, {0, 1, 2, 3});
  EXPECT_THROW(min_distance(c, Budget{15, 1}), BudgetExceeded);
  EXPECT_EQ(min_distance(c, Budget{16, 1}), 3u);
  const auto rep = classify(c, Budget{4, 1});
  EXPECT_FALSE(rep.d);
  EXPECT_TRUE(rep.distance_note);
}

TEST(Block, ControlMustAnnihilate) {
  const Field f = Field::gf(2);
  const Mat g = Mat::from_ints(f, {{1, 1, 0}});
  EXPECT_THROW(BlockCode(g, Mat::from_ints(f, {{1, 0}, {0, 1}, {0, 0}})), std::invalid_argument);
  const auto c = BlockCode::from_generator(g);
  EXPECT_TRUE((c.generator() * c.control()).is_zero());
}

TEST(Block, DualSwapsRoles) {
  const auto c = derive_block_code(hamming_unit().scheme, {0, 1, 2, 3});
  const auto d = dual(c);
  EXPECT_EQ(d.r(), 3u);
  EXPECT_EQ(min_distance(d), 4u);  // simplex [7,3,4]
}

TEST(Block, IdentitySchemeIsLcdWithDistanceOne) {
  const auto s = make_scheme(Mat::identity(Field::gf(3), 4));
  const auto rep = classify(derive_block_code(s, {0, 2}));
  EXPECT_EQ(rep.d, std::optional<std::size_t>(1));
  EXPECT_TRUE(rep.lcd);
  EXPECT_EQ(rep.intersection_dim, 0u);
}

TEST(Block, GolaySelfDual) {
  const auto c = self_dual_from_orthogonal(golay_x());
  const auto rep = classify(c);
  EXPECT_EQ(rep.n, 24u);
  EXPECT_EQ(rep.k, 12u);
  EXPECT_EQ(rep.d, std::optional<std::size_t>(8));
  EXPECT_TRUE(rep.self_dual);
  EXPECT_EQ(rep.css, (CssParameters{24, 0, 8}));
}

TEST(Block, ExtendedHammingSelfDual) {
  const auto rep = classify(self_dual_from_orthogonal(binary_x4_matrix()));
  EXPECT_EQ(rep.d, std::optional<std::size_t>(4));
  EXPECT_TRUE(rep.self_dual);
}

TEST(Block, SelfDualNeedsOrthogonalWithScaleOne) {
  EXPECT_THROW(self_dual_from_orthogonal(hadamard12(Field::gf(5))), std::invalid_argument);
  // over GF(7) there is no i; the construction moves to GF(49)
  const Field f = Field::gf(7);
  const Mat x = Mat::from_ints(f, {{1, 0}, {0, -1}});
  const auto c = self_dual_from_orthogonal(x);
  EXPECT_EQ(c.field().order(), 49u);
  EXPECT_TRUE(classify(c).self_dual);
}

TEST(Block, TwoHOverGf5IsLcdNotSelfDual) {
  // (2H)(2H)^T = 48 I = 3 I, and I + 3 I != 0, so (I, 2H) is not self-orthogonal
  const Field f = Field::gf(5);
  const auto c = BlockCode::from_generator(hstack(Mat::identity(f, 12), scaled(hadamard12(f), 2)));
  EXPECT_EQ(intersection_dim(c), 0u);
}

TEST(Block, CssRequiresDualContaining) {
  EXPECT_THROW(css_parameters(derive_block_code(hamming_unit().scheme, {4, 5, 6})), std::invalid_argument);
  const auto css = css_parameters(dual(dual(derive_block_code(hamming_unit().scheme, {0, 1, 2, 3}))));
  EXPECT_EQ(css, (CssParameters{7, 1, 3}));
}
