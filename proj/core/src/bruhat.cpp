#include "lcurve/bruhat.hpp"

#include <cmath>

namespace lcurve {

double orthogonality_error(const Eigen::MatrixXd& q) {
  const auto m = q.rows();
  return (q.transpose() * q - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
}

void require_special_orthogonal(const Eigen::MatrixXd& q) {
  if (q.rows() != q.cols() || q.rows() == 0) throw SizeMismatch("expected a nonempty square matrix");
  if (orthogonality_error(q) >= kOrthTolerance) throw DomainError("matrix is not orthogonal");
  if (q.determinant() <= 0.0) throw DomainError("matrix has nonpositive determinant");
}

BruhatDecomposition decompose(const Eigen::MatrixXd& q, double floor) {
  require_special_orthogonal(q);
  return decompose_generic<double>(q, floor);
}

bool is_upper_positive(const Eigen::MatrixXd& u) {
  if (u.rows() != u.cols()) return false;
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    if (!(u(i, i) > 0.0)) return false;
    for (Eigen::Index j = 0; j < i; ++j) {
      if (u(i, j) != 0.0) return false;
    }
  }
  return true;
}

Eigen::MatrixXd random_rotation(int m, std::mt19937_64& rng) {
  if (m < 1) throw DomainError("random_rotation needs m >= 1");
  std::normal_distribution<double> normal;
  Eigen::MatrixXd g(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) g(i, j) = normal(rng);
  }
  Eigen::MatrixXd q = orthogonalize_positive<double>(g);
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

Eigen::MatrixXd bruhat_action(const Eigen::MatrixXd& u, const Eigen::MatrixXd& q) {
  if (u.rows() != q.rows() || u.cols() != q.cols()) throw SizeMismatch("B(U,Q) operands differ in size");
  if (!is_upper_positive(u)) throw DomainError("B(U,Q) needs U upper triangular with positive diagonal");
  return orthogonalize_positive<double>(u * q);
}

namespace {

Eigen::MatrixXd to_double(const MatrixX<Wide>& x) { return x.cast<double>(); }

}  // namespace

CellLift lift_to_representative(const MatrixX<Wide>& f, const SpinNumeric& start, const Wide& floor) {
  using std::abs;
  using std::pow;
  const auto e = eliminate(f, floor);
  const Eigen::Index m = f.rows();
  const MatrixX<Wide> u1 = e.left.triangularView<Eigen::Upper>().solve(MatrixX<Wide>::Identity(m, m));
  double spread = 1.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const Wide ratio = abs(u1(i, j)) / u1(i, i);
      if (ratio > 0) spread = std::max(spread, static_cast<double>(pow(ratio, Wide(1) / Wide(j - i))));
    }
  }
  // With D = diag(s^{m-1}, ..., s, 1), orth(D f) = orth(D u1 D^{-1} q0) stays in
  // the cell and tends to q0 as s -> 0; s = 10^{-decades u}.
  double decades = std::log10(spread) + 9.0;
  const MatrixX<Wide> q0 = e.q0.to_matrix().cast<Wide>();
  const auto path = [&](double u) -> Eigen::MatrixXd {
    if (u <= 0.0) return to_double(f);
    const Wide s = pow(Wide(10), Wide(-decades * u));
    MatrixX<Wide> scaled = u1;
    for (Eigen::Index i = 0; i < m; ++i) {
      Wide factor = s;
      for (Eigen::Index j = i + 1; j < m; ++j, factor *= s) scaled(i, j) *= factor;
    }
    return to_double(orthogonalize_positive<Wide>(MatrixX<Wide>(scaled * q0)));
  };
  const Eigen::MatrixXd target = e.q0.to_matrix();
  while ((path(1.0) - target).cwiseAbs().maxCoeff() > 1e-10) {
    decades += 8.0;
    if (decades > 600.0) throw BoundaryError("torus flow does not reach the cell representative");
  }
  const auto lifted = lift_continuous(path, 0.0, 1.0, start, kCellLiftStep);
  const auto snapped = snap_to_exact(lifted.endpoint, 1e-6);
  const auto image = pi_signed(snapped.element);
  if (!image || *image != e.q0) throw SnapError("lifted homotopy did not end at the cell representative");
  return {snapped.element, e.q0, snapped.error, lifted.steps};
}

ExactSpinElement decompose_spin(const SpinNumeric& z) {
  const Eigen::MatrixXd p = pi_matrix(z);
  require_special_orthogonal(p);
  eliminate<double>(p, kPivotFloor);
  return lift_to_representative(p.cast<Wide>(), z, Wide(kPivotFloor)).element;
}

}  // namespace lcurve
