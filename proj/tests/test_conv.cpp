#include <gtest/gtest.h>

#include "unitcodes/block.hpp"
#include "unitcodes/conv.hpp"
#include "unitcodes/fourier.hpp"
#include "unitcodes/named.hpp"

using namespace unitcodes;

namespace {

// Minimum weight of P(z) G(z) over all nonzero P with deg P <= depth and
// P(0) != 0, by listing every P.
std::size_t naive_free_distance(const ConvCode& c, std::size_t depth) {
  const Field& f = c.field();
  const std::size_t k = c.k(), n = c.n(), mu = c.memory();
  const auto gc = c.generator().coeffs();
  std::size_t inputs = 1;
  for (std::size_t i = 0; i < k; ++i) inputs *= f.order();
  std::size_t total = 1;
  for (std::size_t t = 0; t <= depth; ++t) total *= inputs;
  std::size_t best = SIZE_MAX;
  for (std::size_t code = 1; code < total; ++code) {
    if (code % inputs == 0) continue;  // P(0) = 0 is a shift of a shorter P
    std::vector<Rep> word((depth + mu + 1) * n, 0);
    std::size_t rest = code;
    for (std::size_t t = 0; t <= depth; ++t) {
      std::size_t u = rest % inputs;
      rest /= inputs;
      for (std::size_t i = 0; i < k; ++i, u /= f.order()) {
        const Rep v = static_cast<Rep>(u % f.order());
        if (!v) continue;
        for (std::size_t j = 0; j <= mu; ++j)
          for (std::size_t col = 0; col < n; ++col)
            word[(t + j) * n + col] = f.add(word[(t + j) * n + col], f.mul(v, gc[j](i, col)));
      }
    }
    best = std::min(best, weight(word.data(), word.size()));
  }
  return best;
}

}  // namespace

TEST(Conv, Gsb) {
  EXPECT_EQ(gsb(7, 4, 3), 7u);
  EXPECT_EQ(gsb(7, 5, 2), 5u);
  EXPECT_EQ(gsb(7, 4, 0), 4u);
  EXPECT_GT(gsb(12, 3, 10), gsb(12, 3, 9));
  EXPECT_THROW(gsb(4, 4, 1), std::invalid_argument);
}

TEST(Conv, ConstructionChecksIdentities) {
  const Field f = Field::gf(2);
  const auto g = PolyMat::constant(Mat::from_ints(f, {{1, 1}}));
  EXPECT_THROW(ConvCode(g, PolyMat::constant(Mat::from_ints(f, {{1}, {0}}))), std::logic_error);
  EXPECT_THROW(ConvCode(g, std::nullopt, PolyMat::constant(Mat::from_ints(f, {{1}, {1}}))), std::logic_error);
  EXPECT_NO_THROW(ConvCode(g, PolyMat::constant(Mat::from_ints(f, {{1}, {1}}))));
}

TEST(Conv, Catastrophic) {
  const Field f = Field::gf(2);
  PolyMat g(f, 1, 2);
  g(0, 0) = {1, 1};
  g(0, 1) = {1, 1};
  const ConvCode c(g);
  EXPECT_FALSE(is_noncatastrophic(c));
  EXPECT_THROW(free_distance(c), std::invalid_argument);
}

TEST(Conv, MemoryZeroReducesToBlockDistance) {
  const auto s = hamming_unit().scheme;
  const Mat g = select_rows(s.u(), {0, 1, 2, 3});
  const ConvCode c(PolyMat::constant(g));
  EXPECT_EQ(c.delta(), 0u);
  EXPECT_EQ(free_distance(c).value, 3u);
}

TEST(Conv, HammingMemoryOne) {
  const auto split = split_sizes(hamming_unit().scheme, {4, 3});
  const auto c = build_memory1_unequal(split);
  EXPECT_EQ(c.delta(), 3u);
  EXPECT_EQ(c.memory(), 1u);
  EXPECT_TRUE(is_noncatastrophic(c));
  const auto fd = free_distance(c);
  // P = (1,1,1,0) + (1,0,0,0)z: weight 3 + 1 + 0
  EXPECT_EQ(fd.value, 4u);
  EXPECT_TRUE(fd.certified);
  EXPECT_EQ(naive_free_distance(c, 3), 4u);
  EXPECT_EQ(memory1_unequal_distance_formula(split), 4u);
  // degree-0 inputs alone reach 6
  EXPECT_EQ(support_distance_profile(c, 1, 3), 6u);
}

TEST(Conv, FourierMemoryOneMds) {
  const auto fs = fourier_scheme(7, Field::gf(2, 3));
  const auto split = split_sizes(fs.scheme, {4, 3});
  const auto c = build_memory1_unequal(split);
  const auto fd = free_distance(c);
  EXPECT_EQ(fd.value, 7u);
  EXPECT_TRUE(fd.settled);
  EXPECT_EQ(conv_classify(c), ConvClass::lcd);
  EXPECT_EQ(memory1_unequal_distance_formula(split), 7u);
}

TEST(Conv, FourierRateFiveSevenDc) {
  const auto fs = fourier_scheme(7, Field::gf(2, 3));
  const auto c = build_memory1_unequal(SchemeSplit(fs.scheme, {{0, 1, 6, 2, 5}, {4, 3}}));
  EXPECT_EQ(c.delta(), 2u);
  EXPECT_EQ(free_distance(c).value, 5u);
  EXPECT_EQ(conv_classify(c), ConvClass::dc);
}

TEST(Conv, TrellisMatchesNaiveOnSmallCodes) {
  std::vector<ConvCode> codes;
  codes.push_back(build_memory1_equal(split_equal(binary_x4().scheme, 2)));
  codes.push_back(build_memory3(split_equal(binary_x4().scheme, 4)));
  codes.push_back(build_memory1_unequal(split_sizes(hamming_unit().scheme, {4, 3})));
  codes.push_back(mixed_rate_builder(split_equal(binary_x4().scheme, 4), MixedPattern::rate34_mem1));
  const auto f5 = fourier_scheme(4, Field::gf(5));
  codes.push_back(build_memory1_equal(split_equal(f5.scheme, 2)));
  for (const auto& c : codes) {
    const auto fd = free_distance(c, 4);
    const std::size_t depth = c.k() * 4 <= 12 ? 3 : 2;
    EXPECT_EQ(fd.value, naive_free_distance(c, depth)) << c.n() << "," << c.k();
  }
}

TEST(Conv, ThreadsDoNotChangeResult) {
  const auto c = build_memory3(split_equal(golay_unit().scheme, 4));
  const auto a = free_distance(c, std::nullopt, Budget{1 << 26, 1});
  const auto b = free_distance(c, std::nullopt, Budget{1 << 26, 3});
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.by_depth, b.by_depth);
}

TEST(Conv, FreeDistanceBudget) {
  const auto c = build_memory3(split_equal(golay_unit().scheme, 4));
  EXPECT_THROW(free_distance(c, std::nullopt, Budget{100, 1}), BudgetExceeded);
}

TEST(Conv, BinaryX4Suite) {
  const auto x = binary_x4().scheme;
  const auto m1 = build_memory1_equal(split_equal(x, 2));
  EXPECT_EQ(free_distance(m1).value, 4u);
  EXPECT_EQ(conv_classify(m1), ConvClass::self_dual);
  EXPECT_EQ(support_distance_profile(m1, 2, 3), 6u);

  const auto m3 = build_memory3(split_equal(x, 4));
  EXPECT_EQ(m3.delta(), 3u);
  EXPECT_EQ(free_distance(m3).value, 12u);

  const auto r1 = mixed_rate_builder(split_equal(x, 4), MixedPattern::rate34_mem1);
  EXPECT_EQ(r1.delta(), 1u);
  EXPECT_EQ(free_distance(r1).value, 2u);
  EXPECT_EQ(conv_classify(r1), ConvClass::dc);

  // annihilated by E3^T + E2^T z + E1^T z^2 + E0^T z^3, but (1+z) divides
  // every 3x3 minor
  const auto r3 = mixed_rate_builder(split_equal(x, 4), MixedPattern::rate34_mem3);
  EXPECT_EQ(r3.delta(), 9u);
  EXPECT_EQ(conv_classify(r3), ConvClass::dc);
  EXPECT_FALSE(is_noncatastrophic(r3));
}

TEST(Conv, MixedMemoryThreeNeedsCharacteristicTwo) {
  const auto fs = fourier_scheme(4, Field::gf(5));
  EXPECT_THROW(mixed_rate_builder(split_equal(fs.scheme, 4), MixedPattern::rate34_mem3), std::invalid_argument);
}

TEST(Conv, GolayMemoryThree) {
  const auto c = build_memory3(split_equal(golay_unit().scheme, 4));
  EXPECT_EQ(c.delta(), 9u);
  const auto fd = free_distance(c);
  EXPECT_EQ(fd.value, 20u);
  EXPECT_TRUE(fd.settled);
  EXPECT_EQ(support_distance_profile(c, 2, 3), 20u);
  const auto d = dual_code(c);
  EXPECT_EQ(d.k(), 9u);
  EXPECT_EQ(d.memory(), 3u);
  EXPECT_EQ(conv_classify(d), ConvClass::dc);
}

TEST(Conv, HadamardTwistedSelfDual) {
  const auto hu = hadamard12_unit(Field::gf(5));
  const auto c = build_memory1_equal(split_equal(hu.scheme, 2), Twist::i);
  EXPECT_EQ(conv_classify(c), ConvClass::self_dual);
  const auto fd = free_distance(c);
  EXPECT_EQ(fd.value, 12u);
  EXPECT_TRUE(fd.certified);
}

TEST(Conv, TwistExtendsFieldWhenNeeded) {
  const auto fs = fourier_scheme(6, Field::gf(7));
  const auto c = build_memory1_equal(split_equal(fs.scheme, 2), Twist::i);
  EXPECT_EQ(c.field().order(), 49u);
}

TEST(Conv, MemoryTwoThreeBlocksControlAnnihilates) {
  const auto fs = fourier_scheme(9, Field::gf(19));
  const auto c = build_memory2_three_blocks(split_equal(fs.scheme, 3));
  EXPECT_EQ(c.delta(), 6u);
  EXPECT_EQ(c.memory(), 2u);
  EXPECT_TRUE((c.generator() * *c.control()).is_zero());
  const auto id = make_scheme(Mat::identity(Field::gf(2), 6));
  EXPECT_NO_THROW(build_memory2_three_blocks(split_equal(id, 3)));
}

TEST(Conv, MemoryOneEqualDistanceAtLeastBlockSum) {
  const auto fs = fourier_scheme(4, Field::gf(5));
  const auto split = split_equal(fs.scheme, 2);
  const auto c = build_memory1_equal(split);
  const std::size_t da = min_distance(BlockCode::from_generator(split.u_block(0)));
  const std::size_t db = min_distance(BlockCode::from_generator(split.u_block(1)));
  EXPECT_GE(free_distance(c).value, da + db);
}

TEST(Conv, DualOfDualContainsOriginal) {
  const auto c = build_memory1_equal(split_equal(binary_x4().scheme, 2));
  const auto d = dual_code(c);
  const auto dd = dual_generator(d);
  const auto r = right_inverse(c.generator());
  ASSERT_TRUE(r);
  EXPECT_EQ((dd * *r) * c.generator(), dd);
}

TEST(Conv, ClassNames) {
  EXPECT_STREQ(to_string(ConvClass::lcd), "lcd");
  EXPECT_STREQ(to_string(ConvClass::self_dual), "self_dual");
}
