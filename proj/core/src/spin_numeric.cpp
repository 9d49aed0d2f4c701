#include "lcurve/spin_numeric.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <mutex>

#include "lcurve/errors.hpp"

namespace lcurve {

namespace {

constexpr int kMaxDimension = 10;

// sign table for blade products, built once per dimension.
const std::vector<signed char>& sign_table(int m) {
  static std::array<std::vector<signed char>, kMaxDimension + 1> tables;
  static std::array<std::once_flag, kMaxDimension + 1> flags;
  std::call_once(flags[m], [m] {
    const std::size_t n = std::size_t{1} << m;
    auto& table = tables[m];
    table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<signed char>(
            blade_product_sign(static_cast<BladeMask>(a), static_cast<BladeMask>(b)));
      }
    }
  });
  return tables[m];
}

void require_dimension(int m) {
  if (m < 1 || m > kMaxDimension) {
    throw DomainError("numerical spin dimension must be in 1.." + std::to_string(kMaxDimension));
  }
}

Eigen::MatrixXd identity(int m) { return Eigen::MatrixXd::Identity(m, m); }

}  // namespace

SpinNumeric::SpinNumeric(int m) : m_(m) {
  require_dimension(m);
  coeffs_.assign(std::size_t{1} << m, 0.0);
}

SpinNumeric::SpinNumeric(int m, std::vector<double> coeffs) : m_(m), coeffs_(std::move(coeffs)) {
  require_dimension(m);
  if (coeffs_.size() != (std::size_t{1} << m)) throw SizeMismatch("dense spin coefficient count");
  for (std::size_t mask = 0; mask < coeffs_.size(); ++mask) {
    if (std::popcount(mask) % 2 == 1 && coeffs_[mask] != 0.0) {
      throw DomainError("numerical spin element has an odd-grade coefficient");
    }
  }
}

SpinNumeric SpinNumeric::one(int m) {
  SpinNumeric z(m);
  z.coeffs_[0] = 1.0;
  return z;
}

SpinNumeric SpinNumeric::from_exact(const ExactSpinElement& z) {
  SpinNumeric out(z.dimension());
  for (const auto& [mask, c] : z.multivector().terms()) out.coeffs_[mask] = c.to_double();
  return out;
}

SpinNumeric SpinNumeric::exp_of_skew(const Eigen::MatrixXd& skew) {
  const int m = static_cast<int>(skew.rows());
  SpinNumeric b(m);
  double size = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const double c = 0.5 * skew(i, j);
      b.coeffs_[(BladeMask{1} << i) | (BladeMask{1} << j)] = c;
      size += std::abs(c);
    }
  }
  if (size == 0.0) return one(m);

  int squarings = 0;
  while (size > 0.25) {
    size *= 0.5;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  for (double& c : b.coeffs_) c *= scale;

  SpinNumeric sum = one(m);
  SpinNumeric term = one(m);
  for (int k = 1; k < 40; ++k) {
    term = (1.0 / k) * (term * b);
    sum = sum + term;
    double largest = 0.0;
    for (double c : term.coeffs_) largest = std::max(largest, std::abs(c));
    if (largest < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

double SpinNumeric::norm() const {
  double total = 0.0;
  for (double c : coeffs_) total += c * c;
  return std::sqrt(total);
}

SpinNumeric SpinNumeric::normalized() const {
  const double n = norm();
  if (n == 0.0) throw DomainError("cannot normalize the zero element");
  return (1.0 / n) * *this;
}

SpinNumeric SpinNumeric::reverse() const {
  SpinNumeric out = *this;
  for (std::size_t mask = 0; mask < coeffs_.size(); ++mask) {
    const int g = std::popcount(mask);
    if ((g * (g - 1) / 2) % 2 == 1) out.coeffs_[mask] = -out.coeffs_[mask];
  }
  return out;
}

SpinNumeric SpinNumeric::operator-() const { return -1.0 * *this; }

SpinNumeric operator*(const SpinNumeric& x, const SpinNumeric& y) {
  if (x.m_ != y.m_) throw SizeMismatch("numerical spin elements of different dimensions");
  const std::size_t n = x.coeffs_.size();
  const auto& table = sign_table(x.m_);
  SpinNumeric out(x.m_);
  for (std::size_t a = 0; a < n; ++a) {
    const double ca = x.coeffs_[a];
    if (ca == 0.0) continue;
    const signed char* row = &table[a * n];
    for (std::size_t b = 0; b < n; ++b) {
      const double cb = y.coeffs_[b];
      if (cb == 0.0) continue;
      out.coeffs_[a ^ b] += row[b] * ca * cb;
    }
  }
  return out;
}

SpinNumeric operator+(const SpinNumeric& x, const SpinNumeric& y) {
  if (x.m_ != y.m_) throw SizeMismatch("numerical spin elements of different dimensions");
  SpinNumeric out = x;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += y.coeffs_[i];
  return out;
}

SpinNumeric operator*(double s, const SpinNumeric& x) {
  SpinNumeric out = x;
  for (double& c : out.coeffs_) c *= s;
  return out;
}

Eigen::MatrixXd pi_matrix(const SpinNumeric& z) {
  const int m = z.dimension();
  const std::size_t n = std::size_t{1} << m;
  const auto& table = sign_table(m);
  const auto rev = z.reverse();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m, m);
  std::vector<double> y(n);
  for (int j = 0; j < m; ++j) {
    const std::size_t ej = std::size_t{1} << j;
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t a = 0; a < n; ++a) {
      if (z.coeffs()[a] != 0.0) y[a ^ ej] += table[a * n + ej] * z.coeffs()[a];
    }
    for (int i = 0; i < m; ++i) {
      const std::size_t ei = std::size_t{1} << i;
      double total = 0.0;
      for (std::size_t a = 0; a < n; ++a) {
        if (y[a] == 0.0) continue;
        const std::size_t b = a ^ ei;
        total += table[a * n + b] * y[a] * rev.coeffs()[b];
      }
      out(i, j) = total;
    }
  }
  return out;
}

double coefficient_distance(const SpinNumeric& x, const SpinNumeric& y) {
  if (x.dimension() != y.dimension()) throw SizeMismatch("numerical spin dimensions differ");
  double out = 0.0;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    out = std::max(out, std::abs(x.coeffs()[i] - y.coeffs()[i]));
  }
  return out;
}

double rotation_angle(const Eigen::MatrixXd& r) {
  const Eigen::MatrixXd d = r - identity(static_cast<int>(r.rows()));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(d);
  const double s = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  return 2.0 * std::asin(std::min(1.0, 0.5 * s));
}

Eigen::MatrixXd log_rotation(const Eigen::MatrixXd& r) {
  const int m = static_cast<int>(r.rows());
  const Eigen::MatrixXd id = identity(m);
  const Eigen::MatrixXd cayley = (r + id).transpose().partialPivLu().solve((r - id).transpose()).transpose();
  const double c_norm = cayley.operatorNorm();
  if (!(c_norm < 0.999)) throw PathError("rotation too far from the identity for the log series");
  const Eigen::MatrixXd c2 = cayley * cayley;
  Eigen::MatrixXd power = cayley;
  Eigen::MatrixXd sum = cayley;
  for (int k = 1; k < 2000; ++k) {
    power = power * c2;
    const Eigen::MatrixXd term = power / static_cast<double>(2 * k + 1);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  const Eigen::MatrixXd log = 2.0 * sum;
  return 0.5 * (log - log.transpose());
}

void FramePath::validate() const {
  if (times.size() != frames.size() || times.empty()) {
    throw PathError("frame path needs one frame per time sample");
  }
  const int m = dimension();
  for (std::size_t k = 0; k < frames.size(); ++k) {
    if (times[k] < 0.0 || times[k] > 1.0 || (k > 0 && !(times[k] > times[k - 1]))) {
      throw PathError("frame path times must increase within [0,1]");
    }
    const auto& f = frames[k];
    if (f.rows() != m || f.cols() != m) throw SizeMismatch("frame path matrices change size");
    if ((f.transpose() * f - identity(m)).cwiseAbs().maxCoeff() > 1e-8 || f.determinant() < 0.0) {
      throw PathError("frame " + std::to_string(k) + " is not a rotation");
    }
    if (k > 0 && rotation_angle(frames[k - 1].transpose() * f) >= kLiftStepGuard) {
      throw PathError("frames " + std::to_string(k - 1) + " and " + std::to_string(k) +
                      " differ by at least pi/4");
    }
  }
}

FramePath lift_path(FramePath path, const SpinNumeric& start) {
  path.validate();
  const int m = path.dimension();
  if (start.dimension() != m) throw SizeMismatch("start spin element has the wrong dimension");
  if ((pi_matrix(start) - path.frames.front()).cwiseAbs().maxCoeff() > 1e-6) {
    throw PathError("start spin element does not project to the initial frame");
  }
  path.lifts.clear();
  path.lifts.reserve(path.frames.size());
  path.lifts.push_back(start);
  for (std::size_t k = 1; k < path.frames.size(); ++k) {
    const Eigen::MatrixXd step = path.frames[k - 1].transpose() * path.frames[k];
    SpinNumeric next = path.lifts.back() * SpinNumeric::exp_of_skew(log_rotation(step));
    if (k % kRenormalizeEvery == 0) next = next.normalized();
    path.lifts.push_back(std::move(next));
  }
  return path;
}

ContinuousLift lift_continuous(const std::function<Eigen::MatrixXd(double)>& path, double t0, double t1,
                               const SpinNumeric& start, double max_step) {
  ContinuousLift out{start, 0, 0.0};
  Eigen::MatrixXd previous = path(t0);
  if ((pi_matrix(start) - previous).cwiseAbs().maxCoeff() > 1e-6) {
    throw PathError("start spin element does not project to the path start");
  }
  const int m = static_cast<int>(previous.rows());
  const double step_bound = 2.0 * std::sin(0.5 * max_step);
  double t = t0;
  double dt = (t1 - t0) / 16.0;
  while (t < t1) {
    const double t_next = std::min(t1, t + dt);
    const Eigen::MatrixXd next = path(t_next);
    const Eigen::MatrixXd step = previous.transpose() * next;
    const double size = (step - identity(m)).norm();
    if (size > step_bound) {
      dt *= 0.5;
      if (dt < 1e-15 * std::max(1.0, std::abs(t1 - t0))) {
        throw PathError("adaptive lifting could not resolve a jump in the path");
      }
      continue;
    }
    out.endpoint = out.endpoint * SpinNumeric::exp_of_skew(log_rotation(step));
    ++out.steps;
    if (out.steps % kRenormalizeEvery == 0) out.endpoint = out.endpoint.normalized();
    previous = next;
    t = t_next;
    if (size < 0.3 * step_bound) dt *= 1.6;
  }
  out.endpoint = out.endpoint.normalized();
  out.max_projection_error = (pi_matrix(out.endpoint) - previous).cwiseAbs().maxCoeff();
  return out;
}

SnapResult snap_to_exact(const SpinNumeric& z, double tol) {
  const int m = z.dimension();
  const Eigen::MatrixXd p = pi_matrix(z);
  Eigen::MatrixXi rounded = Eigen::MatrixXi::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    Eigen::Index j = 0;
    const double largest = p.row(i).cwiseAbs().maxCoeff(&j);
    if (largest < 0.5) throw SnapError("projection is not close to a signed permutation");
    rounded(i, j) = p(i, j) > 0 ? 1 : -1;
  }
  SignedPermutation q;
  try {
    q = SignedPermutation::from_matrix(rounded);
  } catch (const ParseError&) {
    throw SnapError("projection is not close to a signed permutation");
  }
  if (!q.in_weyl_group()) throw SnapError("projection rounds to a determinant -1 matrix");
  const auto lift = canonical_lift(q);
  const auto numeric = SpinNumeric::from_exact(lift);
  const double plus = coefficient_distance(z, numeric);
  const double minus = coefficient_distance(z, -numeric);
  SnapResult out{plus <= minus ? lift : neg(lift), std::min(plus, minus)};
  if (out.error > tol) {
    throw SnapError("nearest exact element is " + std::to_string(out.error) + " away (tol " +
                    std::to_string(tol) + ")");
  }
  return out;
}

}  // namespace lcurve
