#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lcurve/clifford_exact.hpp"
#include "lcurve/errors.hpp"
#include "lcurve/exact_coefficient.hpp"

using namespace lcurve;

namespace {

ExactSpinElement blade(int m, BladeMask mask, int sign = 1) {
  return ExactSpinElement(ExactMultivector::blade(m, mask, ExactCoefficient::integer(sign)));
}

}  // namespace

TEST(ExactCoefficient, Arithmetic) {
  const auto h = ExactCoefficient::inv_sqrt2();
  EXPECT_EQ(h * h, ExactCoefficient(1, 0, 1));
  EXPECT_EQ(ExactCoefficient(2, 0, 1), ExactCoefficient::integer(1));
  EXPECT_EQ(ExactCoefficient(4, 2, 2), ExactCoefficient(2, 1, 1));
  EXPECT_EQ(h + h - h, h);
  EXPECT_NEAR(ExactCoefficient(1, 1, 2).to_double(), (1 + std::sqrt(2.0)) / 4, 1e-15);
  EXPECT_TRUE((h - h).is_zero());
  EXPECT_EQ(ExactCoefficient(1, 1, 2).to_string(), "(1+1*sqrt2)/2^2");
}

TEST(Clifford, BladeSigns) {
  EXPECT_EQ(blade_product_sign(0b01, 0b01), 1);
  EXPECT_EQ(blade_product_sign(0b01, 0b10), 1);
  EXPECT_EQ(blade_product_sign(0b10, 0b01), -1);
  EXPECT_EQ(blade_product_sign(0b11, 0b11), -1);
  const auto e12 = blade(3, 0b011);
  EXPECT_EQ(e12 * e12, ExactSpinElement::minus_one(3));
  EXPECT_EQ(e12 * e12.inverse(), ExactSpinElement::one(3));
}

TEST(Clifford, RejectsNonUnitOrOdd) {
  EXPECT_THROW(ExactSpinElement(ExactMultivector::blade(3, 0b001, ExactCoefficient::integer(1))), DomainError);
  EXPECT_THROW(ExactSpinElement(ExactMultivector::scalar(3, ExactCoefficient::integer(2))), DomainError);
}

TEST(Clifford, SpinGroupOrders) {
  EXPECT_EQ(spin_group_order(3), 48);
  for (int m = 1; m <= 6; ++m) {
    const auto all = enumerate_tilde_D(m);
    EXPECT_EQ(static_cast<long long>(all.size()), spin_group_order(m));
    EXPECT_EQ(std::set<ExactSpinElement>(all.begin(), all.end()).size(), all.size());
  }
  EXPECT_THROW(enumerate_tilde_D(8), GuardExceeded);
}

TEST(Clifford, ProjectionIsTwoToOneHomomorphism) {
  for (int m = 2; m <= 5; ++m) {
    const auto all = enumerate_tilde_D(m);
    std::set<SignedPermutation> images;
    for (const auto& z : all) {
      const auto q = pi_signed(z);
      ASSERT_TRUE(q.has_value());
      EXPECT_EQ(*pi_signed(neg(z)), *q);
      EXPECT_LT((pi_matrix(z) - q->to_matrix()).norm(), 1e-12);
      images.insert(*q);
    }
    EXPECT_EQ(static_cast<long long>(images.size()), weyl_group_order(m));
    std::mt19937_64 rng(m);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int k = 0; k < 200; ++k) {
      const auto& x = all[pick(rng)];
      const auto& y = all[pick(rng)];
      EXPECT_EQ(*pi_signed(x * y), *pi_signed(x) * *pi_signed(y));
    }
  }
}

TEST(Clifford, CanonicalLift) {
  for (int m = 2; m <= 5; ++m) {
    for_each_D(m, [&](const SignedPermutation& q) { EXPECT_EQ(*pi_signed(canonical_lift(q)), q); });
  }
}

TEST(Clifford, WElements) {
  EXPECT_EQ(w(3, 3), ExactSpinElement::one(3));
  EXPECT_EQ(w(3, -1), blade(3, 0b011, -1));
  for (int m = 2; m <= 7; ++m) {
    for (int s = m; s >= -m; s -= 4) EXPECT_EQ(*pi_signed(w(m, s)), make_M(m, s).matrix);
  }
  EXPECT_THROW(w(3, 1), DomainError);
}

TEST(Clifford, TrAndAdLifts) {
  for (int m = 2; m <= 5; ++m) {
    const auto all = enumerate_tilde_D(m);
    for (const auto& z : all) {
      EXPECT_EQ(*pi_signed(tr_spin(z)), tr(*pi_signed(z)));
      EXPECT_EQ(*pi_signed(ad_spin(z)), ad(*pi_signed(z)));
      EXPECT_EQ(tr_spin(tr_spin(z)), z);
    }
    EXPECT_EQ(tr_spin(ExactSpinElement::one(m)), ExactSpinElement::one(m));
    EXPECT_EQ(ad_spin(ExactSpinElement::one(m)), ExactSpinElement::one(m));
    for (std::size_t k = 0; k + 1 < all.size(); k += 5) {
      EXPECT_EQ(ad_spin(all[k] * all[k + 1]), ad_spin(all[k]) * ad_spin(all[k + 1]));
      EXPECT_EQ(tr_spin(all[k] * all[k + 1]), tr_spin(all[k + 1]) * tr_spin(all[k]));
    }
  }
}

TEST(Clifford, AntipodalWitness) {
  for (int m = 3; m <= 7; ++m) {
    for (int s = m - 4; s > -m; s -= 4) {
      const auto z = tr_antipodal_witness(m, s);
      const auto q = pi_signed(z);
      ASSERT_TRUE(q.has_value());
      EXPECT_TRUE(q->is_diagonal());
      EXPECT_EQ(q->to_int_matrix().trace(), s);
      EXPECT_EQ(tr_spin(z), neg(z));
    }
  }
  EXPECT_THROW(tr_antipodal_witness(4, 4), DomainError);
}
