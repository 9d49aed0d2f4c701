#pragma once

#include <random>

#include <Eigen/Dense>

namespace lcurve::test_support {

inline Eigen::MatrixXd random_skew(int m, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      x(i, j) = normal(rng);
      x(j, i) = -x(i, j);
    }
  }
  return x;
}

// Upper triangular with diagonal in [0.5, 2] and off-diagonal entries in [-1, 1].
inline Eigen::MatrixXd random_upper(int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> diag(0.5, 2.0);
  std::uniform_real_distribution<double> off(-1.0, 1.0);
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    u(i, i) = diag(rng);
    for (int j = i + 1; j < m; ++j) u(i, j) = off(rng);
  }
  return u;
}

}  // namespace lcurve::test_support
