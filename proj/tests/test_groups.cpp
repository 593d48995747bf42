#include <gtest/gtest.h>

#include "common.hpp"

using namespace hhcross;
using namespace hhcross::testing;

TEST(Groups, Generation) {
  const auto mi = minus_id_group();
  ASSERT_EQ(mi->size(), 2u);
  EXPECT_EQ(mi->order_of(0), 1u);
  EXPECT_EQ(mi->order_of(1), 2u);
  EXPECT_EQ(swap_group()->size(), 2u);
  EXPECT_EQ(s3_group()->size(), 6u);
  EXPECT_EQ(z3_group()->size(), 3u);
}

TEST(Groups, IdentityFirstAndTablesConsistent) {
  const auto g = s3_group();
  EXPECT_EQ(g->element(0), Matrix::identity(3, kP));
  for (std::size_t a = 0; a < g->size(); ++a)
    for (std::size_t b = 0; b < g->size(); ++b)
      EXPECT_EQ(g->element(a) * g->element(b), g->element(g->multiply(a, b)));
}

TEST(Groups, Conjugation) {
  const auto g = s3_group();
  const auto t12 = g->index_of(mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  const auto c123 = g->index_of(mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  const auto c132 = g->index_of(mat({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  ASSERT_LT(c132, g->size());
  EXPECT_EQ(g->conjugate(t12, c123), c132);
  EXPECT_EQ(g->conjugate(0, c123), c123);
  EXPECT_EQ(g->conjugate(t12, 0), 0u);
}

TEST(Groups, Codimensions) {
  const auto g = s3_group();
  std::size_t transpositions = 0, cycles = 0;
  for (std::size_t e = 1; e < g->size(); ++e) {
    if (g->order_of(e) == 2) {
      EXPECT_EQ(g->codim(e), 1u);
      ++transpositions;
    } else {
      EXPECT_EQ(g->codim(e), 2u);
      ++cycles;
    }
  }
  EXPECT_EQ(transpositions, 3u);
  EXPECT_EQ(cycles, 2u);
}

TEST(Groups, Errors) {
  // order 6 group with p = 5: p does not exceed |G|
  try {
    generate_group({{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CharacteristicTooSmall);
  }
  EXPECT_THROW(generate_group({{{1, 1}, {0, 1}}}, 7), Error);  // unipotent, order 7
  EXPECT_THROW(generate_group({{{1, 1}, {1, 1}}}, 7), Error);  // singular
}

TEST(Groups, SuggestPrime) {
  const std::vector<std::vector<std::vector<std::int64_t>>> s3 = {
      {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}};
  const auto s = suggest_prime(s3, 3);
  EXPECT_EQ(s.p, 7u);
  EXPECT_EQ(s.group_order, 6u);
  EXPECT_EQ(s.exponent, 6u);
  EXPECT_EQ(suggest_prime(s3, 3, 7).p, 13u);
}
