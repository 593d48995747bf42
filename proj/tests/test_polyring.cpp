#include <gtest/gtest.h>

#include "common.hpp"

using namespace hhcross;
using namespace hhcross::testing;

namespace {
Polynomial x(std::size_t i, std::size_t vars = 2) { return Polynomial::variable(vars, i, kP); }
}  // namespace

TEST(Polyring, Multiply) {
  const Polynomial f = x(0) * x(1) + x(0);
  EXPECT_EQ(f * one(2), f);
  EXPECT_EQ((x(0) * x(1)).to_string(), "x1*x2");
  EXPECT_EQ(((x(0) + x(1)) * (x(0) + x(1))).to_string(), "x1^2 + 2*x1*x2 + x2^2");
}

TEST(Polyring, SubstituteLinear) {
  const Polynomial f = x(0) * x(1) + x(0);
  EXPECT_EQ(substitute_linear(f, Matrix::identity(2, kP)), f);
  EXPECT_EQ(substitute_linear(x(0), mat({{-1, 0}, {0, -1}})), x(0) * Fp(kP, -1));
  EXPECT_EQ(substitute_linear(x(0) * x(1), mat({{2, 0}, {0, 4}})), x(0) * x(1));
  EXPECT_THROW(substitute_linear(f, Matrix::identity(3, kP)), Error);
}

TEST(Polyring, Restrict) {
  const auto diag = Subspace::span_of_rows(mat({{1, 1}}));
  const Polynomial c = Polynomial::constant(2, Fp(kP, 4));
  EXPECT_EQ(restrict_to_subspace(c, diag), Polynomial::constant(1, Fp(kP, 4)));
  EXPECT_TRUE(restrict_to_subspace(x(0) - x(1), diag).is_zero());
  const Polynomial t = Polynomial::variable(1, 0, kP);
  EXPECT_EQ(restrict_to_subspace(x(0) * x(1), diag), t * t);
}

TEST(Polyring, Monomials) {
  EXPECT_EQ(monomials_of_degree(3, 2).size(), 6u);
  EXPECT_EQ(count_monomials(3, 2), 6u);
  EXPECT_EQ(count_monomials(0, 0), 1u);
  EXPECT_EQ(count_monomials(0, 1), 0u);
  const auto m = monomials_of_degree(2, 2);
  EXPECT_EQ(Polynomial::constant(2, Fp::one(kP)).degree(), 0u);
  EXPECT_EQ(m.front().exp[1], 2);  // x2^2 < x1 x2 < x1^2
  EXPECT_EQ(m.back().exp[0], 2);
}

TEST(Polyring, ArityChecked) {
  EXPECT_THROW(x(0, 2) + x(0, 3), Error);
}
