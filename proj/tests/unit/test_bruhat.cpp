#include <gtest/gtest.h>

#include <random>

#include "lcurve/bruhat.hpp"
#include "lcurve/errors.hpp"
#include "support.hpp"

using namespace lcurve;

namespace {

bool unit_upper(const Eigen::MatrixXd& u) {
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    if (std::abs(u(i, i) - 1.0) > 1e-12) return false;
    for (Eigen::Index j = 0; j < i; ++j) {
      if (u(i, j) != 0.0) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Bruhat, RoundTripOnRandomRotations) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 2000; ++k) {
    const int m = 2 + k % 5;
    const Eigen::MatrixXd q = random_rotation(m, rng);
    const auto d = decompose(q);
    EXPECT_TRUE(is_upper_positive(d.u1));
    EXPECT_TRUE(unit_upper(d.u2));
    EXPECT_LT((d.u1 * d.q0.to_matrix() * d.u2 - q).cwiseAbs().maxCoeff(), 1e-8);
    EXPECT_LT(d.residual, 1e-8);
  }
}

TEST(Bruhat, IdentityOnRepresentatives) {
  for (int m = 1; m <= 5; ++m) {
    for_each_D(m, [&](const SignedPermutation& q) {
      const auto d = decompose(q.to_matrix());
      EXPECT_EQ(d.q0, q);
      EXPECT_LT((d.u1 - Eigen::MatrixXd::Identity(m, m)).norm(), 1e-12);
    });
  }
}

TEST(Bruhat, ActionPreservesCell) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 1000; ++k) {
    const int m = 2 + k % 5;
    const auto all = enumerate_D(m);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    const Eigen::MatrixXd q = k % 2 ? random_rotation(m, rng) : all[pick(rng)].to_matrix();
    const Eigen::MatrixXd moved = bruhat_action(test_support::random_upper(m, rng), q);
    EXPECT_LT(orthogonality_error(moved), 1e-10);
    EXPECT_EQ(decompose(moved).q0, decompose(q).q0);
  }
}

TEST(Bruhat, RejectsBadInput) {
  EXPECT_THROW(decompose(2.0 * Eigen::MatrixXd::Identity(3, 3)), DomainError);
  Eigen::MatrixXd reflection = Eigen::MatrixXd::Identity(3, 3);
  reflection(0, 0) = -1.0;
  EXPECT_THROW(decompose(reflection), DomainError);
  Eigen::MatrixXd lower = Eigen::MatrixXd::Identity(3, 3);
  lower(2, 0) = 1.0;
  EXPECT_THROW(bruhat_action(lower, Eigen::MatrixXd::Identity(3, 3)), DomainError);
}

TEST(Bruhat, OrthogonalizePositive) {
  std::mt19937_64 rng(23);
  const Eigen::MatrixXd u = test_support::random_upper(4, rng);
  const Eigen::MatrixXd q = random_rotation(4, rng);
  const Eigen::MatrixXd f = q * u;
  EXPECT_LT((orthogonalize_positive<double>(f) - q).norm(), 1e-10);
}

TEST(Bruhat, WideEliminationMatchesDouble) {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 50; ++k) {
    const Eigen::MatrixXd q = random_rotation(4, rng);
    const auto d = decompose(q);
    const auto wide = decompose_generic<Wide>(q.cast<Wide>(), Wide(kWidePivotFloor));
    EXPECT_EQ(wide.q0, d.q0);
    EXPECT_LT((wide.u1 - d.u1).norm(), 1e-9);
  }
}

TEST(Bruhat, DecomposeSpinOnLifts) {
  for (const auto& z : enumerate_tilde_D(4)) {
    EXPECT_EQ(decompose_spin(SpinNumeric::from_exact(z)), z);
  }
}

TEST(Bruhat, DecomposeSpinOnGenericElements) {
  std::mt19937_64 rng(25);
  for (int k = 0; k < 20; ++k) {
    const int m = 3 + k % 2;
    const auto z = SpinNumeric::exp_of_skew(test_support::random_skew(m, rng, 2.0));
    EXPECT_EQ(*pi_signed(decompose_spin(z)), decompose(pi_matrix(z)).q0);
  }
}
