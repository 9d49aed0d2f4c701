#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "lcurve/clifford_exact.hpp"

namespace lcurve {

// Floating-point even element of Cl(R^m), dense over blade masks.
class SpinNumeric {
 public:
  SpinNumeric() = default;
  explicit SpinNumeric(int m);
  SpinNumeric(int m, std::vector<double> coeffs);

  static SpinNumeric one(int m);
  static SpinNumeric from_exact(const ExactSpinElement& z);
  // exp of the bivector (1/2) sum_{i<j} X_ij e_i e_j, whose projection is exp(X).
  static SpinNumeric exp_of_skew(const Eigen::MatrixXd& skew);

  int dimension() const { return m_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double coefficient(BladeMask mask) const { return coeffs_[mask]; }

  double norm() const;
  SpinNumeric normalized() const;
  SpinNumeric reverse() const;
  SpinNumeric operator-() const;

  friend SpinNumeric operator*(const SpinNumeric& x, const SpinNumeric& y);
  friend SpinNumeric operator+(const SpinNumeric& x, const SpinNumeric& y);
  friend SpinNumeric operator*(double s, const SpinNumeric& x);

 private:
  int m_ = 0;
  std::vector<double> coeffs_;
};

Eigen::MatrixXd pi_matrix(const SpinNumeric& z);
double coefficient_distance(const SpinNumeric& x, const SpinNumeric& y);

// Principal logarithm of a rotation with all rotation angles below pi/2,
// from the odd series of artanh applied to the Cayley transform.
Eigen::MatrixXd log_rotation(const Eigen::MatrixXd& r);
// Largest rotation angle of r (operator-norm based).
double rotation_angle(const Eigen::MatrixXd& r);

inline constexpr double kLiftStepGuard = 0.7853981633974483;  // pi/4
inline constexpr int kRenormalizeEvery = 16;

struct FramePath {
  std::vector<double> times;
  std::vector<Eigen::MatrixXd> frames;
  std::vector<SpinNumeric> lifts;

  int dimension() const { return frames.empty() ? 0 : static_cast<int>(frames.front().rows()); }
  // Throws unless times increase in [0,1], frames are rotations within 1e-8
  // and consecutive frames differ by less than pi/4.
  void validate() const;
};

// Fills lifts: lifts[0] = start, lifts[k] = lifts[k-1] exp(log(F_{k-1}^T F_k) / lifted).
FramePath lift_path(FramePath path, const SpinNumeric& start);

// Adaptive lifting of a continuous rotation path t -> path(t) on [t0, t1];
// steps are subdivided until every step rotates by less than max_step.
struct ContinuousLift {
  SpinNumeric endpoint;
  int steps = 0;
  double max_projection_error = 0.0;
};
ContinuousLift lift_continuous(const std::function<Eigen::MatrixXd(double)>& path, double t0, double t1,
                               const SpinNumeric& start, double max_step = 0.19634954084936207);

struct SnapResult {
  ExactSpinElement element;
  double error = 0.0;
};

// Nearest element of the double cover of D_m; throws SnapError beyond tol.
SnapResult snap_to_exact(const SpinNumeric& z, double tol = 1e-6);

}  // namespace lcurve
