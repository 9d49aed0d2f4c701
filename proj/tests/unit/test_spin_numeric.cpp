#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lcurve/clifford_exact.hpp"
#include "lcurve/curves.hpp"
#include "lcurve/errors.hpp"
#include "lcurve/spin_numeric.hpp"
#include "support.hpp"

using namespace lcurve;

TEST(SpinNumeric, ExactRoundTrip) {
  for (const auto& z : enumerate_tilde_D(4)) {
    const auto n = SpinNumeric::from_exact(z);
    EXPECT_NEAR(n.norm(), 1.0, 1e-14);
    EXPECT_EQ(snap_to_exact(n).element, z);
  }
}

TEST(SpinNumeric, ExpProjectsToMatrixExp) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const int m = 2 + k % 5;
    const Eigen::MatrixXd x = test_support::random_skew(m, rng, 1.5);
    const auto z = SpinNumeric::exp_of_skew(x);
    EXPECT_NEAR(z.norm(), 1.0, 1e-12);
    EXPECT_LT((pi_matrix(z) - expm<double>(x)).norm(), 1e-10);
  }
}

TEST(SpinNumeric, ProductIsMultiplicative) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 50; ++k) {
    const auto x = SpinNumeric::exp_of_skew(test_support::random_skew(4, rng));
    const auto y = SpinNumeric::exp_of_skew(test_support::random_skew(4, rng));
    EXPECT_LT((pi_matrix(x * y) - pi_matrix(x) * pi_matrix(y)).norm(), 1e-10);
    EXPECT_LT(coefficient_distance(x * x.reverse(), SpinNumeric::one(4)), 1e-12);
  }
}

TEST(SpinNumeric, LogRotation) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    const Eigen::MatrixXd x = test_support::random_skew(3 + k % 3, rng, 0.3);
    const Eigen::MatrixXd r = expm<double>(x);
    EXPECT_LT((log_rotation(r) - x).norm(), 1e-10);
    EXPECT_GT(rotation_angle(r), 0.0);
  }
  Eigen::MatrixXd half = Eigen::MatrixXd::Identity(3, 3);
  half(0, 0) = half(1, 1) = -1.0;
  EXPECT_THROW(log_rotation(half), PathError);
  EXPECT_NEAR(rotation_angle(half), std::numbers::pi, 1e-12);
}

TEST(SpinNumeric, FullTurnLiftsToMinusOne) {
  for (int m = 2; m <= 6; ++m) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(m, m);
    x(1, 0) = 2.0 * std::numbers::pi;
    x(0, 1) = -x(1, 0);
    const auto two_pi = lift_continuous([&](double t) { return expm<double>(Eigen::MatrixXd(t * x)); }, 0.0, 1.0,
                                        SpinNumeric::one(m));
    EXPECT_LT(coefficient_distance(two_pi.endpoint, -SpinNumeric::one(m)), 1e-6);
    const auto four_pi = lift_continuous(
        [&](double t) { return expm<double>(Eigen::MatrixXd(2.0 * t * x)); }, 0.0, 1.0, SpinNumeric::one(m));
    EXPECT_LT(coefficient_distance(four_pi.endpoint, SpinNumeric::one(m)), 1e-6);
  }
}

TEST(SpinNumeric, OmegaPathsEndAtW) {
  for (int m = 2; m <= 6; ++m) {
    for (int s = m; s >= -m; s -= 4) {
      const auto snapped = snap_to_exact(omega_lift(m, s));
      EXPECT_EQ(snapped.element, w(m, s)) << "m=" << m << " s=" << s;
      EXPECT_LT(snapped.error, 1e-6);
    }
  }
  EXPECT_THROW(omega_path(3, 1, 0.5), DomainError);
}

TEST(SpinNumeric, FramePathValidation) {
  FramePath path;
  path.times = {0.0, 1.0};
  path.frames = {Eigen::MatrixXd::Identity(3, 3), -Eigen::MatrixXd::Identity(3, 3)};
  EXPECT_THROW(path.validate(), PathError);
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(3, 3);
  x(2, 1) = 0.1;
  x(1, 2) = -0.1;
  path.frames[1] = expm<double>(x);
  EXPECT_NO_THROW(path.validate());
  path.times = {0.5, 0.2};
  EXPECT_THROW(path.validate(), PathError);
}

TEST(SpinNumeric, SnapRejectsOffLattice) {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(3, 3);
  x(1, 0) = 0.3;
  x(0, 1) = -0.3;
  EXPECT_THROW(snap_to_exact(SpinNumeric::exp_of_skew(x)), SnapError);
}
