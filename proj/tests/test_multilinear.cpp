#include <gtest/gtest.h>

#include "common.hpp"
#include "hhcross/multilinear.hpp"

using namespace hhcross;
using namespace hhcross::testing;

namespace {
Multivector e(std::size_t i, std::int64_t c = 1) { return Multivector::basis(2, Mask{1} << i, Fp(kP, c)); }
const Fp kHalf = Fp(kP, 2).inverse();
}  // namespace

TEST(Multilinear, Wedge) {
  EXPECT_EQ(wedge(e(0), e(1)), wedge(e(1), e(0)) * Fp(kP, -1));
  EXPECT_TRUE(wedge(e(0), e(0)).is_zero());
  EXPECT_EQ(wedge(e(0) + e(1), e(1)), wedge(e(0), e(1)));
  EXPECT_EQ(merge_sign(0b10, 0b01), -1);
  EXPECT_EQ(merge_sign(0b01, 0b01), 0);
}

TEST(Multilinear, MapComponents) {
  const Multivector a = e(0) + e(1) * Fp(kP, 3);
  EXPECT_EQ(map_components(Matrix::identity(2, kP), a), a);
  EXPECT_TRUE(map_components(Matrix(2, 2, kP), a).is_zero());
  const Matrix pi = mat({{1, 1}, {1, 1}}) * kHalf;
  EXPECT_EQ(map_components(pi, e(0)), (e(0) + e(1)) * kHalf);
  // top degree picks up the determinant
  const Matrix m = mat({{2, 1}, {1, 3}});
  EXPECT_EQ(map_components(m, wedge(e(0), e(1))), wedge(e(0), e(1)) * determinant(m));
}

TEST(Multilinear, Reframe) {
  const Matrix std_frame = Matrix::identity(2, kP);
  const Matrix w = mat({{1, 1}, {1, -1}});
  EXPECT_EQ(reframe(e(0), w, w), e(0));
  EXPECT_EQ(reframe(e(0) + e(1), std_frame, w), e(0));
  EXPECT_EQ(reframe(e(0), std_frame, w), (e(0) + e(1)) * kHalf);
  // v1 is not in the span of w1 alone
  EXPECT_THROW(reframe(e(0), std_frame, mat({{1}, {1}})), Error);
}

TEST(Multilinear, Masks) {
  EXPECT_EQ(masks_of_size(4, 2).size(), 6u);
  EXPECT_EQ(mask_indices(0b1010), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(indices_mask({0, 2}), Mask{0b101});
  EXPECT_EQ(full_mask(3), Mask{0b111});
}
