#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "lcurve/errors.hpp"
#include "lcurve/signed_perm.hpp"
#include "lcurve/spin_numeric.hpp"

namespace lcurve {

// 50 significant decimal digits; germ frames need it once m >= 5.
using Wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                           boost::multiprecision::et_off>;

template <class S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

inline constexpr double kPivotFloor = 1e-10;
inline constexpr double kWidePivotFloor = 1e-40;
inline constexpr double kOrthTolerance = 1e-8;
// pi/8, inside the pi/4 guard.
inline constexpr double kCellLiftStep = 0.39269908169872414;

// left * f * right = q0 with left upper triangular with positive diagonal and
// right unit upper triangular.
template <class S>
struct Elimination {
  MatrixX<S> left;
  MatrixX<S> right;
  SignedPermutation q0;
};

// Column sweep, pivoting on the lowest unconsumed row above the floor.
template <class S>
Elimination<S> eliminate(const MatrixX<S>& f, const S& floor) {
  using std::abs;
  const Eigen::Index m = f.rows();
  if (f.cols() != m) throw SizeMismatch("Bruhat elimination needs a square matrix");
  MatrixX<S> w = f;
  MatrixX<S> left = MatrixX<S>::Identity(m, m);
  MatrixX<S> right = MatrixX<S>::Identity(m, m);
  std::vector<bool> consumed(m, false);
  std::vector<int> word(m, 0);
  for (Eigen::Index j = 0; j < m; ++j) {
    Eigen::Index r = -1;
    for (Eigen::Index i = m - 1; i >= 0; --i) {
      if (!consumed[i] && abs(w(i, j)) > floor) {
        r = i;
        break;
      }
    }
    if (r < 0) {
      throw BoundaryError("no admissible pivot in column " + std::to_string(j + 1) +
                          " (matrix on a cell boundary)");
    }
    consumed[r] = true;
    const S pivot = w(r, j);
    for (Eigen::Index i = 0; i < r; ++i) {
      if (w(i, j) == 0) continue;
      const S c = w(i, j) / pivot;
      w.row(i) -= c * w.row(r);
      left.row(i) -= c * left.row(r);
      w(i, j) = 0;
    }
    for (Eigen::Index k = j + 1; k < m; ++k) {
      if (w(r, k) == 0) continue;
      const S c = w(r, k) / pivot;
      w.col(k) -= c * w.col(j);
      right.col(k) -= c * right.col(j);
      w(r, k) = 0;
    }
    const S scale = 1 / abs(pivot);
    w.row(r) *= scale;
    left.row(r) *= scale;
    word[r] = static_cast<int>(pivot > 0 ? j + 1 : -(j + 1));
  }
  return {std::move(left), std::move(right), SignedPermutation(std::move(word))};
}

// Gram-Schmidt (twice) on the columns; the triangular factor has positive diagonal.
template <class S>
MatrixX<S> orthogonalize_positive(const MatrixX<S>& a) {
  using std::sqrt;
  MatrixX<S> q = a;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index k = 0; k < j; ++k) {
        const S c = q.col(k).dot(q.col(j));
        q.col(j) -= c * q.col(k);
      }
    }
    S norm = sqrt(q.col(j).squaredNorm());
    if (!(norm > 0)) throw DomainError("columns are linearly dependent");
    q.col(j) /= norm;
  }
  return q;
}

struct BruhatDecomposition {
  Eigen::MatrixXd u1;
  SignedPermutation q0;
  Eigen::MatrixXd u2;
  double residual = 0.0;
};

template <class S>
BruhatDecomposition decompose_generic(const MatrixX<S>& f, const S& floor) {
  const auto e = eliminate(f, floor);
  const Eigen::Index m = f.rows();
  const MatrixX<S> id = MatrixX<S>::Identity(m, m);
  const MatrixX<S> u1 = e.left.template triangularView<Eigen::Upper>().solve(id);
  const MatrixX<S> u2 = e.right.template triangularView<Eigen::Upper>().solve(id);
  const MatrixX<S> q0 = e.q0.to_matrix().template cast<S>();
  const MatrixX<S> diff = u1 * q0 * u2 - f;
  double residual = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      residual = std::max(residual, std::abs(static_cast<double>(diff(i, j))));
    }
  }
  return {u1.template cast<double>(), e.q0, u2.template cast<double>(), residual};
}

double orthogonality_error(const Eigen::MatrixXd& q);
// Throws DomainError unless q is special orthogonal within kOrthTolerance.
void require_special_orthogonal(const Eigen::MatrixXd& q);

// q = u1 q0 u2; q must be special orthogonal.
BruhatDecomposition decompose(const Eigen::MatrixXd& q, double floor = kPivotFloor);

bool is_upper_positive(const Eigen::MatrixXd& u);
// Haar-distributed element of SO(m).
Eigen::MatrixXd random_rotation(int m, std::mt19937_64& rng);

// B(U, Q) = U Q U' with U' the positive upper triangular factor making it orthogonal.
Eigen::MatrixXd bruhat_action(const Eigen::MatrixXd& u, const Eigen::MatrixXd& q);

struct CellLift {
  ExactSpinElement element;
  SignedPermutation q0;
  double snap_error = 0.0;
  int steps = 0;
};

// Lifts the in-cell homotopy s -> orth(diag(s^{m-1}, ..., s, 1) f) from start
// towards s = 0 and snaps the endpoint; f and start must describe the same frame.
CellLift lift_to_representative(const MatrixX<Wide>& f, const SpinNumeric& start, const Wide& floor);

ExactSpinElement decompose_spin(const SpinNumeric& z);

}  // namespace lcurve
