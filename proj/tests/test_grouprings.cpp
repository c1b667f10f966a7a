#include <gtest/gtest.h>

#include "unitcodes/grouprings.hpp"

using namespace unitcodes;

namespace {
const char* kPublishedElement = "g^15 + g^9 + g^5 + h*g^21 + h*g^4 + h^2*g^2 + h^3*g^2 + h^3*g^12 @ C24xC4";
const char* kSparseUnit = "g + g^22 + h*g^4 + h*g^14 + h^2*g^14 + h^3*g^10 + h^3*g^23 @ C24xC4";
}  // namespace

TEST(GroupRing, ParseForms) {
  const auto a = GroupRingElem::parse("1 + g + h*g^2 + h^3", 5);
  EXPECT_EQ(a.support(), 4u);
  EXPECT_TRUE(a.coeff(0, 0));
  EXPECT_TRUE(a.coeff(1, 2));
  EXPECT_TRUE(a.coeff(3, 0));
  EXPECT_EQ(GroupRingElem::parse("hg^2", 5), GroupRingElem::parse("h*g^2", 5));
  EXPECT_EQ(GroupRingElem::parse("g^7 @ C5xC4").index(0, 2), 2u);
  EXPECT_EQ(GroupRingElem::parse("g + g", 3), GroupRingElem(3));
  EXPECT_THROW(GroupRingElem::parse("g + x", 3), std::invalid_argument);
  EXPECT_THROW(GroupRingElem::parse("g"), std::invalid_argument);
  EXPECT_THROW(GroupRingElem::parse("g @ C5xC3"), std::invalid_argument);
}

TEST(GroupRing, ToStringRoundTrip) {
  const auto v = GroupRingElem::parse(kPublishedElement);
  EXPECT_EQ(GroupRingElem::parse(v.to_string()), v);
}

TEST(GroupRing, MatrixIsRegularRepresentation) {
  const auto a = GroupRingElem::parse("1 + g + h*g^3", 4);
  const auto b = GroupRingElem::parse("g^2 + h^2 + h^3*g", 4);
  EXPECT_EQ(gr_to_matrix(a * b), gr_to_matrix(a) * gr_to_matrix(b));
  EXPECT_EQ(gr_to_matrix(a + b), gr_to_matrix(a) + gr_to_matrix(b));
  EXPECT_EQ(gr_from_row0(gr_to_matrix(a), 4), a);
}

TEST(GroupRing, Inverse) {
  const auto one = GroupRingElem::one(6);
  const auto g = GroupRingElem::parse("g", 6);
  const auto gi = gr_inverse(g);
  ASSERT_TRUE(gi);
  EXPECT_EQ(g * *gi, one);
  // 1 + g is a zero divisor in characteristic 2
  EXPECT_FALSE(gr_inverse(GroupRingElem::parse("1 + g", 6)));
}

TEST(GroupRing, PublishedElementIsNotAUnit) {
  const auto v = GroupRingElem::parse(kPublishedElement);
  EXPECT_EQ(v.support(), 8u);
  const Mat m = gr_to_matrix(v);
  // even support: augmentation is 0, so v is not a unit
  EXPECT_EQ(rank(m), 88u);
  EXPECT_FALSE(gr_inverse(v));
  const auto cyc = short_cycle_census(m);
  EXPECT_EQ(cyc.max_row_weight, 8u);
  EXPECT_EQ(cyc.max_col_weight, 8u);
  EXPECT_EQ(cyc.four_cycles, 288u);
  EXPECT_THROW(ldpc_derive(v, ldpc_rows(96, 48)), std::domain_error);
}

TEST(GroupRing, CycleCensusSmall) {
  const Field f = Field::gf(2);
  // two columns sharing two rows: one 4-cycle
  EXPECT_EQ(short_cycle_census(Mat::from_ints(f, {{1, 1}, {1, 1}})).four_cycles, 1u);
  // a triangle: columns pairwise sharing distinct rows
  const auto tri = short_cycle_census(Mat::from_ints(f, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}), 6);
  EXPECT_EQ(tri.four_cycles, 0u);
  EXPECT_EQ(tri.six_cycles, std::optional<std::uint64_t>(1));
}

TEST(GroupRing, LdpcFromSparseUnit) {
  const auto w = GroupRingElem::parse(kSparseUnit);
  const auto der = ldpc_derive(w, ldpc_rows(96, 48), Girth::four);
  EXPECT_EQ(der.code.n(), 96u);
  EXPECT_EQ(der.code.r(), 48u);
  EXPECT_TRUE((der.code.generator() * der.code.control()).is_zero());
  EXPECT_EQ(der.cycles.four_cycles, 0u);
  EXPECT_LE(der.cycles.max_col_weight, 7u);
}

TEST(GroupRing, LdpcConvolutional) {
  const auto w = GroupRingElem::parse(kSparseUnit);
  const auto c1 = ldpc_conv_memory1(w);
  EXPECT_EQ(c1.k(), 48u);
  EXPECT_TRUE((c1.generator() * *c1.control()).is_zero());
  EXPECT_EQ(short_cycle_census(c1.control()->coeff(0)).four_cycles, 0u);
  EXPECT_EQ(short_cycle_census(c1.control()->coeff(1)).four_cycles, 0u);
  const auto c3 = ldpc_conv_memory3(w);
  EXPECT_EQ(c3.k(), 24u);
  EXPECT_EQ(c3.memory(), 3u);
}

TEST(GroupRing, SeededRowsAreDeterministic) {
  EXPECT_EQ(ldpc_rows(96, 48, 7), ldpc_rows(96, 48, 7));
  EXPECT_NE(ldpc_rows(96, 48, 7), ldpc_rows(96, 48, 8));
  EXPECT_EQ(ldpc_rows(10, 3), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(GroupRing, SparseUnitSearch) {
  EXPECT_THROW(find_sparse_unit(24, 8, 1, 10), std::invalid_argument);
  const auto w = find_sparse_unit(24, 7, 1, 2000);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->to_string(), GroupRingElem::parse(kSparseUnit).to_string());
}
