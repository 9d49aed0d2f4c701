#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "lcurve/bruhat.hpp"
#include "lcurve/signed_perm.hpp"
#include "lcurve/spin_numeric.hpp"

namespace lcurve {

// Spiral curve gamma(t) in R^{n+1}: for even n
//   (c_0, c_1 cos a_1 t, c_1 sin a_1 t, ..., c_k cos a_k t, c_k sin a_k t), n = 2k,
// and for odd n the same without the constant coordinate, n = 2k - 1.
class CurveSpec {
 public:
  CurveSpec() = default;
  // c holds c_0 first when the constant term is present. Requires sum c_i^2 = 1.
  CurveSpec(int n, std::vector<double> c, std::vector<double> a);
  // Same checks except the normalization.
  static CurveSpec unnormalized(int n, std::vector<double> c, std::vector<double> a);
  // Random amplitudes and distinct frequencies in [1, 2 pi max_turns).
  static CurveSpec random(int n, std::mt19937_64& rng, double max_turns = 3.0);
  // Frequencies 4 pi, 8 pi, ... and equal amplitudes.
  static CurveSpec closed_standard(int n);

  int n() const { return n_; }
  int dimension() const { return n_ + 1; }
  bool includes_constant() const { return n_ % 2 == 0; }
  const std::vector<double>& c() const { return c_; }
  const std::vector<double>& a() const { return a_; }

  // The block rotation R(t) with gamma(t) = R(t) gamma(0), and its k-th derivative.
  Eigen::MatrixXd block_rotation(double t, int k = 0) const;

 private:
  CurveSpec(int n, std::vector<double> c, std::vector<double> a, bool normalize_check);
  int n_ = 0;
  std::vector<double> c_;
  std::vector<double> a_;
};

// Skew-symmetric tridiagonal matrix with positive subdiagonal.
class TridiagonalLog {
 public:
  TridiagonalLog() = default;
  explicit TridiagonalLog(std::vector<double> subdiagonal);
  static TridiagonalLog ones(int m);
  // Entries log-uniform in [0.1, 10].
  static TridiagonalLog random(int m, std::mt19937_64& rng);
  // Subdiagonal sqrt(k (m - k)); exp(-(pi/2) X) is the antidiagonal A.
  static TridiagonalLog veronese(int m);
  // Accepts a skew matrix whose off-tridiagonal part is below tol.
  static TridiagonalLog from_matrix(const Eigen::MatrixXd& x, double tol);

  int dimension() const { return static_cast<int>(sub_.size()) + 1; }
  const std::vector<double>& subdiagonal() const { return sub_; }

  template <class S>
  MatrixX<S> matrix() const {
    const int m = dimension();
    MatrixX<S> x = MatrixX<S>::Zero(m, m);
    for (int i = 0; i + 1 < m; ++i) {
      x(i + 1, i) = S(sub_[i]);
      x(i, i + 1) = -S(sub_[i]);
    }
    return x;
  }

 private:
  std::vector<double> sub_;
};

// Taylor series with scaling and squaring.
template <class S>
MatrixX<S> expm(const MatrixX<S>& x) {
  using std::abs;
  const Eigen::Index m = x.rows();
  S size = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) size += abs(x(i, j));
  }
  int squarings = 0;
  while (size > S(0.25)) {
    size /= 2;
    ++squarings;
  }
  MatrixX<S> y = x;
  for (int s = 0; s < squarings; ++s) y /= S(2);
  const S eps = std::numeric_limits<S>::epsilon();
  MatrixX<S> sum = MatrixX<S>::Identity(m, m);
  MatrixX<S> term = MatrixX<S>::Identity(m, m);
  for (int k = 1; k < 200; ++k) {
    term = (term * y) / S(k);
    sum += term;
    S largest = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) largest = std::max<S>(largest, abs(term(i, j)));
    }
    if (largest < eps / 16) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

// k-th derivative of gamma at t, closed form.
Eigen::VectorXd evaluate(const CurveSpec& spec, double t, int order);
// Columns gamma, gamma', ..., gamma^(n).
Eigen::MatrixXd derivative_matrix(const CurveSpec& spec, double t);
double wronskian(const CurveSpec& spec, double t);

// Orthogonal factor of the derivative matrix, before normalization.
Eigen::MatrixXd raw_frenet(const CurveSpec& spec, double t);
// Frenet frame of F(0)^T gamma, so that the frame at 0 is the identity.
Eigen::MatrixXd frenet(const CurveSpec& spec, double t);
// F^{-1} F' of the normalized frame; constant in t for spiral curves.
TridiagonalLog frenet_log(const CurveSpec& spec);

// n frames at t_k = k / (samples - 1) with their lift from 1.
FramePath frame_path(const CurveSpec& spec, int samples);
// Spin endpoint of the normalized frame path, lifted adaptively.
SpinNumeric spin_endpoint(const CurveSpec& spec);

// (m - s)/4 plane rotations by pi t in coordinates (1,2), (3,4), ...; ends at M(m, s).
Eigen::MatrixXd omega_path(int m, int s, double t);
SpinNumeric omega_lift(int m, int s);

// Q exp(-h L).
Eigen::MatrixXd germ_frame(const SignedPermutation& q, double h, const TridiagonalLog& log);
MatrixX<Wide> germ_frame_wide(const SignedPermutation& q, double h, const TridiagonalLog& log);
// Cell of the germ frame, computed in extended precision.
SignedPermutation germ_cell(const SignedPermutation& q, double h, const TridiagonalLog& log);

// Frames of J+ Q^T F(1-t) J+ (Q the final frame), times reflected.
FramePath curve_tr(const FramePath& path);
// Frames of A^T F(t) A.
FramePath curve_ad(const FramePath& path);
// Wronskians in closed form of the two transformed curves.
double wronskian_tr(const CurveSpec& spec, double t);
double wronskian_ad(const CurveSpec& spec, double t);

struct FastCurveRow {
  std::uint64_t n_factor = 1;
  double min_wronskian = 0.0;
  double max_frame_distance = 0.0;
};

struct FastCurveReport {
  std::vector<FastCurveRow> rows;
  // First N with positive minimal sampled Wronskian, 0 if none.
  std::uint64_t first_positive = 0;
  bool distance_decreasing = false;
};

// gamma(t) = exp(t X) gamma_f(N t) with gamma_f the normalized spiral curve;
// Wronskians are of the columns gamma^(k) / N^k, frames compared with exp(tX) F_f(Nt).
FastCurveReport fast_curve_check(const Eigen::MatrixXd& skew, const CurveSpec& spec, int max_log2_n,
                                 int samples);

}  // namespace lcurve
