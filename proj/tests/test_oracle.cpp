#include <gtest/gtest.h>

#include "common.hpp"
#include "hhcross/oracle.hpp"
#include "hhcross/random.hpp"

using namespace hhcross;
using namespace hhcross::testing;

namespace {
const Fp kHalf = Fp(kP, 2).inverse();

Multivector v(std::size_t n, Mask m) { return Multivector::basis(n, m, Fp::one(kP)); }
Polynomial x(std::size_t i) { return Polynomial::variable(2, i, kP); }
}  // namespace

TEST(Koszul, IdentityHasZeroDifferential) {
  const auto g = trivial_group(3);
  const KoszulComplex kc(*g, 0);
  for (std::size_t q = 0; q <= 3; ++q)
    for (unsigned d = 0; d <= 3; ++d) EXPECT_EQ(kc.cohomology_dim(q, d), binomial(3, q) * count_monomials(3, d));
}

TEST(Koszul, MinusIdInDimensionOne) {
  const auto g = make_group({{{-1}}});
  EXPECT_EQ(koszul_cohomology_dim(*g, 1, 1, 0), 1u);
  for (unsigned d = 0; d <= 3; ++d) EXPECT_EQ(koszul_cohomology_dim(*g, 1, 0, d), 0u);
  for (unsigned d = 1; d <= 3; ++d) EXPECT_EQ(koszul_cohomology_dim(*g, 1, 1, d), 0u);
}

TEST(Koszul, MinusIdInDimensionTwo) {
  const auto g = minus_id_group();
  EXPECT_EQ(koszul_cohomology_dim(*g, 1, 2, 0), 1u);
  EXPECT_EQ(koszul_cohomology_dim(*g, 1, 1, 0), 0u);
  EXPECT_EQ(koszul_cohomology_dim(*g, 1, 2, 1), 0u);
}

TEST(Koszul, ClosedFormOnS3) {
  const auto g = s3_group();
  for (std::size_t e = 0; e < g->size(); ++e)
    for (std::size_t q = 0; q <= 3; ++q)
      for (unsigned d = 0; d <= 3; ++d) EXPECT_EQ(koszul_cohomology_dim(*g, e, q, d), closed_form_dim(*g, e, q, d));
}

TEST(Koszul, DSquaredZero) {
  const auto g = s3_group();
  const KoszulComplex kc(*g, 3);
  const Matrix dd = kc.differential(2, 2) * kc.differential(1, 1);
  EXPECT_EQ(dd, Matrix(dd.rows(), dd.cols(), kP));
}

TEST(Hkr, Evaluations) {
  const auto g = trivial_group(2);
  const Matrix std_frame = Matrix::identity(2, kP);
  const Polynomial f = x(0) * x(1) + one(2);

  const Cochain c0 = hkr_cochain(*g, 0, Multivector::scalar(2, Fp::one(kP)), f, std_frame);
  EXPECT_EQ(c0.at({}), f);

  const Cochain c1 = hkr_cochain(*g, 0, v(2, 0b01), f, std_frame);
  EXPECT_EQ(c1.at({0}), f);
  EXPECT_TRUE(c1.at({1}).is_zero());

  const Cochain c2 = hkr_cochain(*g, 0, v(2, 0b11), f, std_frame);
  EXPECT_EQ(c2.at({0, 1}), f * kHalf);
  EXPECT_EQ(c2.at({1, 0}), f * -kHalf);
  EXPECT_TRUE(c2.at({0, 0}).is_zero());
}

TEST(OracleProduct, FactorialGuard) {
  // p = 5, n = 4: degrees 3 + 2 need 1/5!
  const auto g = std::make_shared<const GroupData>(generate_group({Matrix::identity(4, 5)}));
  HHClass a(g, 3), b(g, 2);
  a.add(0, 0b0111, Polynomial::constant(4, Fp::one(5)));
  b.add(0, 0b0011, Polynomial::constant(4, Fp::one(5)));
  try {
    oracle_product(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FactorialNotInvertible);
  }
}

TEST(Mu, ConstantCochains) {
  const auto g = swap_group();
  const Matrix frame = g->frame(1).coords;
  const Cochain phi = hkr_cochain(*g, 1, Multivector::scalar(2, Fp::one(kP)), one(1), frame);
  const Cochain unit_c = hkr_cochain(*g, 0, Multivector::scalar(2, Fp::one(kP)), one(2), frame);
  EXPECT_EQ(mu_product(*g, phi, unit_c).at({}), phi.at({}));
  EXPECT_EQ(mu_product(*g, phi, unit_c).target, 1u);

  // f at g times e at h is f * (e o g) at gh
  const Cochain f_at_e = hkr_cochain(*g, 0, Multivector::scalar(2, Fp::one(kP)), x(0) + one(2), frame);
  const Cochain e_at_e = hkr_cochain(*g, 0, Multivector::scalar(2, Fp::one(kP)), x(0), frame);
  EXPECT_EQ(mu_product(*g, f_at_e, e_at_e).at({}), (x(0) + one(2)) * x(0));
  const Polynomial s_lift = one(2);  // constant 1 on V^s lifts to 1
  const Cochain one_at_s = hkr_cochain(*g, 1, Multivector::scalar(2, Fp::one(kP)), one(1), frame);
  EXPECT_EQ(mu_product(*g, one_at_s, e_at_e).at({}), s_lift * x(1));

  const Cochain other = hkr_cochain(*g, 0, Multivector::scalar(2, Fp::one(kP)), one(2), Matrix::identity(2, kP));
  EXPECT_THROW(mu_product(*g, phi, other), Error);
}

TEST(ReadOff, RoundTripAtIdentity) {
  const auto g = trivial_group(3);
  const Polynomial f = Polynomial::variable(3, 2, kP) + Polynomial::constant(3, Fp(kP, 3));
  for (std::size_t k = 0; k <= 3; ++k)
    for (Mask m : masks_of_size(3, k)) {
      const Cochain c = hkr_cochain(*g, 0, v(3, m), f, g->frame(0).coords);
      const auto terms = read_off(*g, c);
      ASSERT_EQ(terms.size(), 1u);
      EXPECT_EQ(terms[0].tangent, v(3, m));
      EXPECT_EQ(terms[0].coeff, f);
    }
}

TEST(ReadOff, ArityBelowCodimension) {
  const auto g = minus_id_group();
  Cochain c{1, 1, g->frame(1).coords, {}};
  EXPECT_TRUE(read_off(*g, c).empty());
  Cochain wrong{0, 1, Matrix::identity(2, kP) * Fp(kP, 2), {}};
  EXPECT_THROW(read_off(*g, wrong), Error);
}

TEST(ReadOff, IncompleteTable) {
  const auto g = minus_id_group();
  Cochain c{2, 1, g->frame(1).coords, {}};
  EXPECT_THROW(read_off(*g, c), Error);
}

TEST(OracleProduct, Examples) {
  const auto sw = swap_group();
  HHClass alpha(sw, 1), gamma(sw, 1), expected(sw, 2);
  alpha.add(1, 0, one(1));
  gamma.add(0, 0b01, one(2));
  expected.add(1, 0b1, one(1) * -kHalf);
  EXPECT_EQ(oracle_product(alpha, gamma), expected);
  EXPECT_EQ(oracle_product(unit(sw), alpha), alpha);

  const auto mi = minus_id_group();
  HHClass a(mi, 2);
  a.add(1, 0, one(0));
  OracleStats stats;
  EXPECT_TRUE(oracle_product(a, a, &stats).is_zero());
  EXPECT_EQ(stats.overlapping_pairs, 1u);
  EXPECT_EQ(stats.overlapping_pairs_nonzero, 0u);
}

TEST(OracleProduct, MatchesClosedFormOnS3) {
  const auto g = s3_group();
  Rng rng(11);
  const auto degs = admissible_degrees(*g);
  for (int t = 0; t < 30; ++t) {
    const HHClass a = random_class(rng, g, rng.pick(degs)), b = random_class(rng, g, rng.pick(degs));
    EXPECT_EQ(product(a, b), oracle_product(a, b));
  }
}
