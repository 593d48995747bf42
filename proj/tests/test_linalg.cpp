#include <gtest/gtest.h>

#include "common.hpp"

using namespace hhcross;
using namespace hhcross::testing;

namespace {
const Matrix kSwap = mat({{0, 1}, {1, 0}});
const Matrix kMinusId = mat({{-1, 0}, {0, -1}});
const Fp kHalf = Fp(kP, 2).inverse();
}  // namespace

TEST(Linalg, RowReduceAndRank) {
  const Matrix m = mat({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  EXPECT_EQ(rank(m), 2u);
  EXPECT_TRUE(determinant(m).is_zero());
  const Matrix a = mat({{2, 1}, {1, 1}});
  EXPECT_EQ(a * inverse(a), Matrix::identity(2, kP));
  EXPECT_EQ(determinant(a), Fp::one(kP));
  EXPECT_THROW(inverse(m), Error);
}

TEST(Linalg, Symmetrizer) {
  EXPECT_EQ(symmetrizer(Matrix::identity(3, kP), 1), Matrix::identity(3, kP));
  EXPECT_EQ(symmetrizer(kMinusId, 2), Matrix(2, 2, kP));
  EXPECT_EQ(symmetrizer(kSwap, 2), mat({{1, 1}, {1, 1}}) * kHalf);
  EXPECT_THROW(symmetrizer(kSwap, 3), Error);
}

TEST(Linalg, FixedSpace) {
  EXPECT_EQ(fixed_space(Matrix::identity(3, kP)), Subspace::full(3, kP));
  EXPECT_EQ(fixed_space(kMinusId).dim(), 0u);
  EXPECT_EQ(fixed_space(kSwap), Subspace::span_of_rows(mat({{1, 1}})));
}

TEST(Linalg, SemiinvariantSpace) {
  EXPECT_EQ(semiinvariant_space(Matrix::identity(2, kP), 1).dim(), 0u);
  EXPECT_EQ(semiinvariant_space(kMinusId, 2), Subspace::full(2, kP));
  EXPECT_EQ(semiinvariant_space(kSwap, 2), Subspace::span_of_rows(mat({{1, -1}})));
}

TEST(Linalg, Eigenframes) {
  const auto ctx2 = make_field_ctx(kP, 2);
  const auto id = eigenframe(Matrix::identity(2, kP), ctx2);
  EXPECT_EQ(id.basis, Matrix::identity(2, kP));
  EXPECT_EQ(id.fixed_dim, 2u);

  const auto ctx3 = make_field_ctx(kP, 3);
  const auto diag = eigenframe(mat({{1, 0}, {0, 2}}), ctx3);
  EXPECT_EQ(diag.basis, Matrix::identity(2, kP));
  EXPECT_EQ(diag.eigenvalues, (std::vector<Fp>{Fp(kP, 1), Fp(kP, 2)}));

  const auto sw = eigenframe(kSwap, ctx2);
  EXPECT_EQ(sw.basis, mat({{1, 1}, {1, -1}}));
  EXPECT_EQ(sw.eigenvalues, (std::vector<Fp>{Fp(kP, 1), Fp(kP, -1)}));
  EXPECT_EQ(sw.fixed_dim, 1u);
}

TEST(Linalg, EigenframeNeedsRoots) {
  // The 3-cycle on F_5^3 has order 3, but F_5 has no primitive cube root.
  const Matrix c = Matrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, 5);
  EXPECT_THROW(eigenframe(c, make_field_ctx(5, 1)), Error);
}

TEST(Linalg, IntersectionCondition) {
  const Matrix id = Matrix::identity(2, kP);
  EXPECT_TRUE(intersection_condition(id, id));
  EXPECT_FALSE(intersection_condition(kMinusId, kMinusId));
  EXPECT_TRUE(intersection_condition(kSwap, id));
}

TEST(Linalg, SubspaceOperations) {
  const auto a = Subspace::span_of_rows(mat({{1, 0, 0}, {0, 1, 0}}));
  const auto b = Subspace::span_of_rows(mat({{0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(a.intersect(b), Subspace::span_of_rows(mat({{0, 1, 0}})));
  EXPECT_EQ(a.sum(b), Subspace::full(3, kP));
  EXPECT_EQ(kernel(mat({{1, 1}})), Subspace::span_of_rows(mat({{1, -1}})));
}
