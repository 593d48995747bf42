#include <gtest/gtest.h>

#include "hhcross/scalars.hpp"

using namespace hhcross;

TEST(Scalars, RootOfUnitySelection) {
  EXPECT_EQ(make_field_ctx(7, 2).zeta().value(), 6u);
  EXPECT_EQ(make_field_ctx(7, 1).zeta().value(), 1u);
  EXPECT_EQ(make_field_ctx(7, 3).zeta().value(), 2u);
}

TEST(Scalars, RootPowersCycle) {
  const auto ctx = make_field_ctx(13, 4);
  EXPECT_EQ(ctx.zeta().pow(4), ctx.one());
  EXPECT_NE(ctx.zeta().pow(2), ctx.one());
  EXPECT_EQ(ctx.root(-1), ctx.zeta().inverse());
  EXPECT_EQ(ctx.root(5), ctx.zeta());
}

TEST(Scalars, Inverses) {
  EXPECT_EQ(scalar_inverse(Fp(7, 1)).value(), 1u);
  EXPECT_EQ(scalar_inverse(Fp(7, 3)).value(), 5u);
  EXPECT_EQ(scalar_inverse(Fp(7, 6)).value(), 6u);
  for (std::int64_t a = 1; a < 11; ++a) EXPECT_EQ(Fp(11, a) * Fp(11, a).inverse(), Fp::one(11));
}

TEST(Scalars, Errors) {
  try {
    make_field_ctx(8, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
  try {
    make_field_ctx(7, 4);  // 4 does not divide 6
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RootUnavailable);
  }
  try {
    Fp(7, 0).inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
  EXPECT_THROW(inverse_factorial(5, 5), Error);
}

TEST(Scalars, ArithmeticWrapsNegatives) {
  EXPECT_EQ(Fp(7, -1).value(), 6u);
  EXPECT_EQ((Fp(7, 3) - Fp(7, 5)).value(), 5u);
  EXPECT_EQ(Fp(7, 6).centered(), -1);
  EXPECT_EQ((inverse_factorial(7, 3) * Fp(7, 6)).value(), 1u);
}

TEST(Scalars, Primes) {
  EXPECT_TRUE(is_prime(7));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(smallest_primitive_root(7), 3u);
  EXPECT_EQ(prime_factors(12), (std::vector<std::uint64_t>{2, 3}));
}
