#include <gtest/gtest.h>

#include "common.hpp"
#include "hhcross/oracle.hpp"
#include "hhcross/random.hpp"

using namespace hhcross;
using namespace hhcross::testing;

namespace {
const Fp kHalf = Fp(kP, 2).inverse();

// alpha: degree 1 at the swap, normal w2; gamma: degree 1 at e, tangent v1.
HHClass alpha(const GroupPtr& g) {
  HHClass a(g, 1);
  a.add(1, 0, one(1));
  return a;
}
HHClass gamma_(const GroupPtr& g) {
  HHClass c(g, 1);
  c.add(0, 0b01, one(2));
  return c;
}
HHClass swap_result(const GroupPtr& g, Fp scale) {
  HHClass r(g, 2);
  r.add(1, 0b1, one(1) * scale);
  return r;
}
}  // namespace

TEST(HHAlgebra, Unit) {
  const auto g = s3_group();
  const HHClass u = unit(g);
  EXPECT_EQ(u.degree(), 0u);
  EXPECT_EQ(product(u, u), u);
  Rng rng(5);
  const HHClass a = random_class(rng, g, 2);
  EXPECT_EQ(product(u, a), a);
  EXPECT_EQ(product(a, u), a);
}

TEST(HHAlgebra, MinusIdVanishes) {
  const auto g = minus_id_group();
  HHClass a(g, 2);
  a.add(1, 0, one(0));
  ProductStats stats;
  EXPECT_TRUE(product(a, a, &stats).is_zero());
  EXPECT_EQ(stats.pairs, 1u);  // degree 4 exceeds dim V, cut before the support test
}

TEST(HHAlgebra, SwapExample) {
  const auto g = swap_group();
  ASSERT_EQ(g->frame(1).eigen.basis, mat({{1, 1}, {1, -1}}));
  EXPECT_EQ(product(alpha(g), gamma_(g)), swap_result(g, -kHalf));
  EXPECT_EQ(product(gamma_(g), alpha(g)), swap_result(g, kHalf));
}

TEST(HHAlgebra, ConjugationAction) {
  const auto g = swap_group();
  const HHClass a = gamma_(g);
  EXPECT_EQ(conjugation_action(0, a), a);
  HHClass v2(g, 1);
  v2.add(0, 0b10, one(2));
  EXPECT_EQ(conjugation_action(1, a), v2);
  const HHClass orbit = alpha(g) + conjugation_action(1, alpha(g));
  EXPECT_EQ(conjugation_action(1, orbit), orbit);
}

TEST(HHAlgebra, InvariantProjection) {
  const auto g = minus_id_group();
  HHClass a(g, 1);
  a.add(0, 0b01, one(2));
  EXPECT_TRUE(invariant_project(a).is_zero());
  EXPECT_EQ(invariant_project(unit(g)), unit(g));
  const HHClass b = invariant_project(gamma_(swap_group()));
  EXPECT_EQ(invariant_project(b), b);
}

TEST(HHAlgebra, Validation) {
  const auto g = swap_group();
  HHClass a(g, 1);
  EXPECT_THROW(a.add(1, 0b1, one(1)), Error);  // degree 2 term in a degree 1 class
  EXPECT_THROW(a.add(1, 0, one(2)), Error);    // V^s has one coordinate
  EXPECT_THROW(alpha(g) + alpha(swap_group()), Error);
}

TEST(HHAlgebra, Basis) {
  // degree 1, polynomial degree 0 on swap: e gives v1, v2; s gives w2 (x) 1.
  EXPECT_EQ(hh_basis(swap_group(), 1, 0).size(), 3u);
  // degree 2 on S3: 3 wedges at e, 2 per transposition, 1 per 3-cycle.
  EXPECT_EQ(hh_basis(s3_group(), 2, 0).size(), 11u);
}

TEST(HHAlgebra, SupportConditionCounted) {
  // g = diag(-1, -1, 1, 1): g times g fits in degree 4 but the complements coincide.
  const auto g = make_group({{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
  HHClass a(g, 2);
  a.add(1, 0, one(2));
  ProductStats stats;
  EXPECT_TRUE(product(a, a, &stats).is_zero());
  EXPECT_EQ(stats.vanished_by_support, 1u);
  EXPECT_TRUE(oracle_product(a, a).is_zero());
}
