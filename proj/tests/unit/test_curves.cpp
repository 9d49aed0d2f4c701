#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lcurve/curves.hpp"
#include "lcurve/errors.hpp"
#include "support.hpp"

using namespace lcurve;

TEST(CurveSpec, Validation) {
  EXPECT_THROW(CurveSpec(0, {1.0}, {1.0}), DomainError);
  EXPECT_THROW(CurveSpec(3, {0.6, 0.8}, {1.0}), SizeMismatch);
  EXPECT_THROW(CurveSpec(3, {0.6, 0.6}, {1.0, 2.0}), DomainError);
  EXPECT_THROW(CurveSpec(3, {0.6, 0.8}, {2.0, 2.0}), DomainError);
  EXPECT_THROW(CurveSpec(3, {-0.6, 0.8}, {1.0, 2.0}), DomainError);
  EXPECT_NO_THROW(CurveSpec::unnormalized(3, {1.0, 1.0}, {1.0, 2.0}));
  const CurveSpec even(2, {0.6, 0.8}, {1.0});
  EXPECT_TRUE(even.includes_constant());
  EXPECT_EQ(even.dimension(), 3);
  const CurveSpec odd(3, {0.6, 0.8}, {1.0, 2.0});
  EXPECT_FALSE(odd.includes_constant());
}

TEST(Curves, DerivativesMatchFiniteDifferences) {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 5; ++n) {
    const CurveSpec spec = CurveSpec::random(n, rng);
    const double t = 0.37;
    const double dt = 1e-6;
    for (int k = 0; k < n; ++k) {
      const Eigen::VectorXd fd = (evaluate(spec, t + dt, k) - evaluate(spec, t - dt, k)) / (2 * dt);
      EXPECT_LT((fd - evaluate(spec, t, k + 1)).norm(), 1e-5 * (1.0 + evaluate(spec, t, k + 1).norm()));
    }
    EXPECT_NEAR(evaluate(spec, t, 0).norm(), 1.0, 1e-12);
    EXPECT_THROW(evaluate(spec, t, n + 1), DomainError);
  }
}

TEST(Curves, RandomSpiralsAreLocallyConvex) {
  std::mt19937_64 rng(32);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k < 20; ++k) {
      const CurveSpec spec = CurveSpec::random(n, rng);
      for (int i = 0; i <= 50; ++i) {
        const double t = i / 50.0;
        EXPECT_GT(wronskian(spec, t), 0.0);
        EXPECT_GT(wronskian_tr(spec, t), 0.0);
        EXPECT_GT(wronskian_ad(spec, t), 0.0);
      }
    }
  }
}

TEST(Curves, FrenetFrameIsNormalized) {
  std::mt19937_64 rng(33);
  for (int n = 1; n <= 5; ++n) {
    const CurveSpec spec = CurveSpec::random(n, rng);
    EXPECT_LT((frenet(spec, 0.0) - Eigen::MatrixXd::Identity(n + 1, n + 1)).norm(), 1e-10);
    const Eigen::MatrixXd f = frenet(spec, 0.6);
    EXPECT_LT(orthogonality_error(f), 1e-10);
    EXPECT_NEAR(f.determinant(), 1.0, 1e-10);
  }
}

TEST(Curves, FrenetLogIsTridiagonal) {
  std::mt19937_64 rng(34);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k < 10; ++k) {
      const CurveSpec spec = CurveSpec::random(n, rng);
      const double t = 0.41;
      const double dt = 1e-5;
      const Eigen::MatrixXd x = log_rotation(frenet(spec, t - dt).transpose() * frenet(spec, t + dt)) / (2 * dt);
      const auto log = TridiagonalLog::from_matrix(x, 1e-4 * (1.0 + x.norm()));
      const auto exact = frenet_log(spec);
      for (int i = 0; i < n; ++i) {
        EXPECT_NEAR(log.subdiagonal()[i], exact.subdiagonal()[i], 1e-4 * (1.0 + x.norm()));
      }
    }
  }
}

TEST(Curves, ClosedSpiralsEndAtOne) {
  for (int n = 1; n <= 5; ++n) {
    const CurveSpec spec = CurveSpec::closed_standard(n);
    EXPECT_LT((frenet(spec, 1.0) - Eigen::MatrixXd::Identity(n + 1, n + 1)).norm(), 1e-8);
    EXPECT_LT(coefficient_distance(spin_endpoint(spec), SpinNumeric::one(n + 1)), 1e-6);
  }
}

TEST(Curves, FramePathLiftsConsistently) {
  const CurveSpec spec = CurveSpec::closed_standard(3);
  const FramePath path = frame_path(spec, 200);
  EXPECT_NO_THROW(path.validate());
  ASSERT_EQ(path.lifts.size(), path.frames.size());
  EXPECT_LT(coefficient_distance(path.lifts.back(), SpinNumeric::one(4)), 1e-6);
  const FramePath reversed = curve_tr(path);
  EXPECT_NO_THROW(reversed.validate());
  EXPECT_LT((reversed.frames.front() - Eigen::MatrixXd::Identity(4, 4)).norm(), 1e-8);
  EXPECT_NO_THROW(curve_ad(path).validate());
}

TEST(Curves, VeroneseLogGivesAntidiagonal) {
  for (int m = 2; m <= 6; ++m) {
    const auto x = TridiagonalLog::veronese(m).matrix<double>();
    const Eigen::MatrixXd a = expm<double>(Eigen::MatrixXd(-std::numbers::pi / 2 * x));
    EXPECT_LT((a - SignedPermutation::antidiagonal(m).to_matrix()).norm(), 1e-10);
  }
}

TEST(Curves, FastRotationBecomesConvex) {
  for (int n = 2; n <= 3; ++n) {
    const CurveSpec spec = CurveSpec::closed_standard(n);
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n + 1, n + 1);
    x(0, n) = 10.0;
    x(n, 0) = -10.0;
    const auto report = fast_curve_check(x, spec, 12, 401);
    EXPECT_GT(report.first_positive, 1u);
    EXPECT_LE(report.first_positive, std::uint64_t{1} << 12);
    EXPECT_TRUE(report.distance_decreasing);
    EXPECT_LT(report.rows.front().min_wronskian, 0.0);
  }
}

TEST(Curves, TridiagonalLogValidation) {
  EXPECT_THROW(TridiagonalLog({1.0, -1.0}), DomainError);
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(3, 3);
  x(2, 0) = 1.0;
  x(0, 2) = -1.0;
  EXPECT_THROW(TridiagonalLog::from_matrix(x, 1e-9), DomainError);
}
