#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "lcurve/curves.hpp"
#include "lcurve/errors.hpp"
#include "lcurve/spin_chop.hpp"

using namespace lcurve;

TEST(Chop, GermCellsMatchFormula) {
  std::mt19937_64 rng(41);
  for (int m = 2; m <= 4; ++m) {
    for_each_D(m, [&](const SignedPermutation& q) {
      for (double h : {1e-2, 1e-3}) {
        EXPECT_EQ(germ_cell(q, h, TridiagonalLog::ones(m)), chop_rep(q));
        EXPECT_EQ(germ_cell(q, h, TridiagonalLog::random(m, rng)), chop_rep(q));
      }
    });
  }
}

TEST(Chop, WorkedGerm) {
  const SignedPermutation q({2, -1, 3});
  EXPECT_EQ(germ_cell(q, 1e-2, TridiagonalLog::ones(3)).to_string(), "[3,-2,1]");
}

TEST(Chop, ChopBaseIsSignless) {
  for_each_D(4, [](const SignedPermutation& q) {
    const auto base = chop_base(q);
    EXPECT_TRUE(base.in_weyl_group());
    for (int i = 1; i <= 4; ++i) {
      EXPECT_EQ(base.column(i), q.column(i));
      if (i > 1) EXPECT_EQ(base.sign(i), 1);
    }
  });
}

TEST(Chop, AIsVeroneseLift) {
  for (int m = 2; m <= 5; ++m) {
    const auto x = TridiagonalLog::veronese(m).matrix<double>();
    const auto lift = snap_to_exact(SpinNumeric::exp_of_skew(-std::numbers::pi / 2 * x)).element;
    EXPECT_EQ(default_chopper(m).a(), lift) << "m=" << m;
    EXPECT_EQ(*pi_signed(default_chopper(m).a()), SignedPermutation::antidiagonal(m));
  }
}

TEST(Chop, SpinChopProjectsAndCommutesWithSigns) {
  for (int m = 2; m <= 4; ++m) {
    for (const auto& z : enumerate_tilde_D(m)) {
      const auto c = chop_spin(z);
      EXPECT_EQ(*pi_signed(c), chop_rep(*pi_signed(z)));
      EXPECT_EQ(chop_spin(neg(z)), neg(c));
      const auto d = delta_spin(z);
      EXPECT_EQ(*pi_signed(d), delta(*pi_signed(z)).to_permutation());
      EXPECT_EQ(s_spin(z), s_value(*pi_signed(z)));
    }
  }
}

TEST(Chop, MemoizedMatchesDirect) {
  std::mt19937_64 rng(42);
  const auto all = enumerate_tilde_D(4);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  const SpinChopper chopper(4);
  for (int k = 0; k < 10; ++k) {
    const auto& z = all[pick(rng)];
    EXPECT_EQ(chopper.chop(z), chop_spin_direct(z, kDefaultChopOffset, TridiagonalLog::ones(4)));
  }
  EXPECT_LE(chopper.numeric_evaluations(), 10);
}

TEST(Chop, IndependentOfOffsetAndLog) {
  std::mt19937_64 rng(43);
  const auto all = enumerate_tilde_D(3);
  for (std::size_t k = 0; k < all.size(); k += 3) {
    const auto reference = chop_spin(all[k]);
    EXPECT_EQ(chop_spin_direct(all[k], 1e-3, TridiagonalLog::ones(3)), reference);
    EXPECT_EQ(chop_spin_direct(all[k], 1e-2, TridiagonalLog::random(3, rng)), reference);
  }
}

TEST(Chop, RejectsBadInput) {
  EXPECT_THROW(germ_cell(SignedPermutation::identity(3), -1.0, TridiagonalLog::ones(3)), DomainError);
  EXPECT_THROW(germ_cell(SignedPermutation::identity(3), 1e-2, TridiagonalLog::ones(4)), SizeMismatch);
}
