#include "lcurve/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lcurve/errors.hpp"

namespace lcurve {

namespace {

int pair_count(int n) { return n % 2 == 0 ? n / 2 : (n + 1) / 2; }

Eigen::MatrixXd plane_rotation(double angle) {
  Eigen::MatrixXd r(2, 2);
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

Eigen::VectorXd initial_point(const CurveSpec& spec) {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(spec.dimension());
  int row = 0;
  std::size_t next = 0;
  if (spec.includes_constant()) g(row++) = spec.c()[next++];
  for (; next < spec.c().size(); ++next, row += 2) g(row) = spec.c()[next];
  return g;
}

Eigen::MatrixXd initial_frame(const CurveSpec& spec) {
  return orthogonalize_positive<double>(derivative_matrix(spec, 0.0));
}

// Derivatives through order n of the normalized curve F(0)^T gamma at t.
Eigen::MatrixXd normalized_derivatives(const CurveSpec& spec, const Eigen::MatrixXd& f0t, double t) {
  return f0t * derivative_matrix(spec, t);
}

double binomial(int k, int j) {
  double out = 1.0;
  for (int i = 1; i <= j; ++i) out = out * (k - j + i) / i;
  return out;
}

}  // namespace

CurveSpec::CurveSpec(int n, std::vector<double> c, std::vector<double> a) : CurveSpec(n, std::move(c), std::move(a), true) {}

CurveSpec CurveSpec::unnormalized(int n, std::vector<double> c, std::vector<double> a) {
  return CurveSpec(n, std::move(c), std::move(a), false);
}

CurveSpec::CurveSpec(int n, std::vector<double> c, std::vector<double> a, bool normalize_check)
    : n_(n), c_(std::move(c)), a_(std::move(a)) {
  if (n < 1) throw DomainError("curve dimension n must be at least 1");
  const auto k = static_cast<std::size_t>(pair_count(n));
  if (a_.size() != k) throw SizeMismatch("expected " + std::to_string(k) + " frequencies for n = " + std::to_string(n));
  const std::size_t amplitudes = k + (includes_constant() ? 1 : 0);
  if (c_.size() != amplitudes) {
    throw SizeMismatch("expected " + std::to_string(amplitudes) + " amplitudes for n = " + std::to_string(n));
  }
  double total = 0.0;
  for (double x : c_) {
    if (!(x > 0.0)) throw DomainError("amplitudes must be positive");
    total += x * x;
  }
  if (normalize_check && std::abs(total - 1.0) > 1e-9) throw DomainError("amplitudes must satisfy sum c_i^2 = 1");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!(a_[i] > 0.0)) throw DomainError("frequencies must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(a_[i] - a_[j]) < 1e-12) throw DomainError("frequencies must be pairwise distinct");
    }
  }
}

CurveSpec CurveSpec::random(int n, std::mt19937_64& rng, double max_turns) {
  const int k = pair_count(n);
  const int amplitudes = k + (n % 2 == 0 ? 1 : 0);
  std::uniform_real_distribution<double> amp(0.1, 1.0);
  std::uniform_real_distribution<double> freq(1.0, 2.0 * std::numbers::pi * max_turns);
  std::vector<double> c(amplitudes);
  double total = 0.0;
  for (double& x : c) {
    x = amp(rng);
    total += x * x;
  }
  for (double& x : c) x /= std::sqrt(total);
  std::vector<double> a;
  while (static_cast<int>(a.size()) < k) {
    const double x = freq(rng);
    if (std::all_of(a.begin(), a.end(), [x](double y) { return std::abs(x - y) > 1e-3; })) a.push_back(x);
  }
  return CurveSpec(n, std::move(c), std::move(a));
}

CurveSpec CurveSpec::closed_standard(int n) {
  const int k = pair_count(n);
  const int amplitudes = k + (n % 2 == 0 ? 1 : 0);
  std::vector<double> c(amplitudes, 1.0 / std::sqrt(static_cast<double>(amplitudes)));
  std::vector<double> a(k);
  for (int i = 0; i < k; ++i) a[i] = 4.0 * std::numbers::pi * (i + 1);
  return CurveSpec(n, std::move(c), std::move(a));
}

Eigen::MatrixXd CurveSpec::block_rotation(double t, int k) const {
  const int m = dimension();
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(m, m);
  int row = 0;
  if (includes_constant()) r(row++, 0) = k == 0 ? 1.0 : 0.0;
  for (double freq : a_) {
    r.block(row, row, 2, 2) = std::pow(freq, k) * plane_rotation(freq * t + k * std::numbers::pi / 2);
    row += 2;
  }
  return r;
}

TridiagonalLog::TridiagonalLog(std::vector<double> subdiagonal) : sub_(std::move(subdiagonal)) {
  for (double x : sub_) {
    if (!(x > 0.0)) throw DomainError("tridiagonal log needs a positive subdiagonal");
  }
}

TridiagonalLog TridiagonalLog::ones(int m) { return TridiagonalLog(std::vector<double>(m - 1, 1.0)); }

TridiagonalLog TridiagonalLog::random(int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> exponent(-1.0, 1.0);
  std::vector<double> sub(m - 1);
  for (double& x : sub) x = std::pow(10.0, exponent(rng));
  return TridiagonalLog(std::move(sub));
}

TridiagonalLog TridiagonalLog::veronese(int m) {
  std::vector<double> sub(m - 1);
  for (int k = 1; k < m; ++k) sub[k - 1] = std::sqrt(static_cast<double>(k * (m - k)));
  return TridiagonalLog(std::move(sub));
}

TridiagonalLog TridiagonalLog::from_matrix(const Eigen::MatrixXd& x, double tol) {
  const auto m = x.rows();
  if (x.cols() != m) throw SizeMismatch("expected a square matrix");
  std::vector<double> sub(m - 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (std::abs(x(i, j) + x(j, i)) > tol) throw DomainError("matrix is not skew-symmetric");
      if (std::abs(i - j) > 1 && std::abs(x(i, j)) > tol) throw DomainError("matrix is not tridiagonal");
    }
  }
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    if (!(x(i + 1, i) > tol)) throw DomainError("subdiagonal entry " + std::to_string(i + 1) + " is not positive");
    sub[i] = x(i + 1, i);
  }
  return TridiagonalLog(std::move(sub));
}

Eigen::VectorXd evaluate(const CurveSpec& spec, double t, int order) {
  if (order < 0 || order > spec.n()) throw DomainError("derivative order must be in 0..n");
  return spec.block_rotation(t, order) * initial_point(spec);
}

Eigen::MatrixXd derivative_matrix(const CurveSpec& spec, double t) {
  const int m = spec.dimension();
  const Eigen::VectorXd g0 = initial_point(spec);
  Eigen::MatrixXd d(m, m);
  for (int k = 0; k < m; ++k) d.col(k) = spec.block_rotation(t, k) * g0;
  return d;
}

double wronskian(const CurveSpec& spec, double t) { return derivative_matrix(spec, t).determinant(); }

Eigen::MatrixXd raw_frenet(const CurveSpec& spec, double t) {
  const Eigen::MatrixXd d = derivative_matrix(spec, t);
  if (d.determinant() < 1e-12) throw DomainError("Wronskian below 1e-12; frame undefined");
  return orthogonalize_positive<double>(d);
}

Eigen::MatrixXd frenet(const CurveSpec& spec, double t) {
  const Eigen::MatrixXd f0t = initial_frame(spec).transpose();
  const Eigen::MatrixXd d = normalized_derivatives(spec, f0t, t);
  if (d.determinant() < 1e-12) throw DomainError("Wronskian below 1e-12; frame undefined");
  return orthogonalize_positive<double>(d);
}

TridiagonalLog frenet_log(const CurveSpec& spec) {
  const Eigen::MatrixXd f0 = initial_frame(spec);
  return TridiagonalLog::from_matrix(f0.transpose() * spec.block_rotation(0.0, 1) * f0, 1e-9);
}

FramePath frame_path(const CurveSpec& spec, int samples) {
  if (samples < 2) throw DomainError("a frame path needs at least two samples");
  FramePath path;
  for (int k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / (samples - 1);
    path.times.push_back(t);
    path.frames.push_back(frenet(spec, t));
  }
  return lift_path(std::move(path), SpinNumeric::one(spec.dimension()));
}

SpinNumeric spin_endpoint(const CurveSpec& spec) {
  const Eigen::MatrixXd f0 = initial_frame(spec);
  const auto path = [&](double t) -> Eigen::MatrixXd {
    return orthogonalize_positive<double>(f0.transpose() * derivative_matrix(spec, t));
  };
  return lift_continuous(path, 0.0, 1.0, SpinNumeric::one(spec.dimension())).endpoint;
}

Eigen::MatrixXd omega_path(int m, int s, double t) {
  if (!make_M(m, s).in_so) throw DomainError("omega path requires s = m mod 4");
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(m, m);
  const double c = std::cos(std::numbers::pi * t);
  const double sn = std::sin(std::numbers::pi * t);
  for (int i = 0; i < (m - s) / 4; ++i) {
    r(2 * i, 2 * i) = c;
    r(2 * i, 2 * i + 1) = -sn;
    r(2 * i + 1, 2 * i) = sn;
    r(2 * i + 1, 2 * i + 1) = c;
  }
  return r;
}

SpinNumeric omega_lift(int m, int s) {
  return lift_continuous([=](double t) { return omega_path(m, s, t); }, 0.0, 1.0, SpinNumeric::one(m)).endpoint;
}

Eigen::MatrixXd germ_frame(const SignedPermutation& q, double h, const TridiagonalLog& log) {
  if (q.size() != log.dimension()) throw SizeMismatch("germ frame sizes differ");
  if (!(h > 0.0)) throw DomainError("germ offset h must be positive");
  return q.to_matrix() * expm<double>(-h * log.matrix<double>());
}

MatrixX<Wide> germ_frame_wide(const SignedPermutation& q, double h, const TridiagonalLog& log) {
  if (q.size() != log.dimension()) throw SizeMismatch("germ frame sizes differ");
  if (!(h > 0.0)) throw DomainError("germ offset h must be positive");
  const MatrixX<Wide> x = log.matrix<Wide>() * Wide(-h);
  return q.to_matrix().cast<Wide>() * expm<Wide>(x);
}

SignedPermutation germ_cell(const SignedPermutation& q, double h, const TridiagonalLog& log) {
  return eliminate<Wide>(germ_frame_wide(q, h, log), Wide(kWidePivotFloor)).q0;
}

FramePath curve_tr(const FramePath& path) {
  if (path.frames.empty()) throw PathError("empty frame path");
  const int m = path.dimension();
  Eigen::MatrixXd j = Eigen::MatrixXd::Identity(m, m);
  for (int i = 1; i < m; i += 2) j(i, i) = -1.0;
  const Eigen::MatrixXd qt = path.frames.back().transpose();
  FramePath out;
  for (std::size_t k = path.frames.size(); k-- > 0;) {
    out.times.push_back(1.0 - path.times[k]);
    out.frames.push_back(j * qt * path.frames[k] * j);
  }
  return out;
}

FramePath curve_ad(const FramePath& path) {
  if (path.frames.empty()) throw PathError("empty frame path");
  const Eigen::MatrixXd a = SignedPermutation::antidiagonal(path.dimension()).to_matrix();
  FramePath out;
  out.times = path.times;
  for (const auto& f : path.frames) out.frames.push_back(a.transpose() * f * a);
  return out;
}

double wronskian_tr(const CurveSpec& spec, double t) {
  const int m = spec.dimension();
  const Eigen::MatrixXd f0t = initial_frame(spec).transpose();
  const Eigen::MatrixXd q = frenet(spec, 1.0);
  Eigen::MatrixXd j = Eigen::MatrixXd::Identity(m, m);
  for (int i = 1; i < m; i += 2) j(i, i) = -1.0;
  Eigen::MatrixXd d = j * q.transpose() * normalized_derivatives(spec, f0t, 1.0 - t);
  for (int k = 1; k < m; k += 2) d.col(k) = -d.col(k);
  return d.determinant();
}

double wronskian_ad(const CurveSpec& spec, double t) {
  const int m = spec.dimension();
  const Eigen::MatrixXd f0 = initial_frame(spec);
  const Eigen::MatrixXd a = SignedPermutation::antidiagonal(m).to_matrix();
  const Eigen::VectorXd e1 = a.col(0);
  Eigen::MatrixXd d(m, m);
  for (int k = 0; k < m; ++k) {
    d.col(k) = a.transpose() * f0.transpose() * spec.block_rotation(t, k) * f0 * e1;
  }
  return d.determinant();
}

FastCurveReport fast_curve_check(const Eigen::MatrixXd& skew, const CurveSpec& spec, int max_log2_n,
                                 int samples) {
  const int m = spec.dimension();
  if (skew.rows() != m || skew.cols() != m) throw SizeMismatch("rotation generator has the wrong size");
  if (samples < 2 || max_log2_n < 0 || max_log2_n > 40) throw DomainError("bad sampling parameters");
  const Eigen::MatrixXd f0t = initial_frame(spec).transpose();
  std::vector<Eigen::MatrixXd> powers(m);
  powers[0] = Eigen::MatrixXd::Identity(m, m);
  for (int k = 1; k < m; ++k) powers[k] = powers[k - 1] * skew;

  FastCurveReport report;
  for (int e = 0; e <= max_log2_n; ++e) {
    const std::uint64_t n_factor = std::uint64_t{1} << e;
    const double nf = static_cast<double>(n_factor);
    FastCurveRow row{n_factor, std::numeric_limits<double>::infinity(), 0.0};
    for (int s = 0; s < samples; ++s) {
      const double t = static_cast<double>(s) / (samples - 1);
      const Eigen::MatrixXd alpha = expm<double>(t * skew);
      const Eigen::MatrixXd base = normalized_derivatives(spec, f0t, nf * t);
      Eigen::MatrixXd cols = Eigen::MatrixXd::Zero(m, m);
      for (int k = 0; k < m; ++k) {
        for (int j = 0; j <= k; ++j) {
          cols.col(k) += binomial(k, j) * std::pow(nf, j - k) * (powers[k - j] * alpha * base.col(j));
        }
      }
      row.min_wronskian = std::min(row.min_wronskian, cols.determinant());
      const Eigen::MatrixXd frame = orthogonalize_positive<double>(cols);
      const Eigen::MatrixXd reference = alpha * orthogonalize_positive<double>(base);
      row.max_frame_distance = std::max(row.max_frame_distance, (frame - reference).cwiseAbs().maxCoeff());
    }
    if (report.first_positive == 0 && row.min_wronskian > 0.0) report.first_positive = n_factor;
    report.rows.push_back(row);
  }
  report.distance_decreasing = true;
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const double previous = report.rows[i - 1].max_frame_distance;
    if (report.rows[i].max_frame_distance > previous * (1.0 + 1e-6) + 1e-12) report.distance_decreasing = false;
  }
  return report;
}

}  // namespace lcurve
