#include "lcurve/clifford_exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "lcurve/errors.hpp"

namespace lcurve {

int blade_product_sign(BladeMask a, BladeMask b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

namespace {

void require_same_dimension(int m1, int m2) {
  if (m1 != m2) {
    throw SizeMismatch("Clifford elements of dimensions " + std::to_string(m1) + " and " +
                       std::to_string(m2));
  }
}

// Dense scratch accumulator indexed by blade mask.
class Accumulator {
 public:
  explicit Accumulator(int m) : values_(std::size_t{1} << m), used_(std::size_t{1} << m, false) {}

  void add(BladeMask mask, const ExactCoefficient& c) {
    if (!used_[mask]) {
      used_[mask] = true;
      touched_.push_back(mask);
      values_[mask] = c;
    } else {
      values_[mask] += c;
    }
  }

  std::vector<ExactMultivector::Term> collect() {
    std::sort(touched_.begin(), touched_.end());
    std::vector<ExactMultivector::Term> out;
    out.reserve(touched_.size());
    for (BladeMask mask : touched_) {
      if (!values_[mask].is_zero()) out.emplace_back(mask, values_[mask]);
    }
    return out;
  }

 private:
  std::vector<ExactCoefficient> values_;
  std::vector<bool> used_;
  std::vector<BladeMask> touched_;
};

int reverse_sign(BladeMask mask) {
  const int g = std::popcount(mask);
  return (g * (g - 1) / 2) % 2 == 0 ? 1 : -1;
}

}  // namespace

ExactMultivector::ExactMultivector(int m, std::vector<Term> terms) : m_(m), terms_(std::move(terms)) {
  if (m < 1 || m > 16) throw DomainError("Clifford dimension must be in 1..16");
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  std::vector<Term> merged;
  for (const auto& [mask, c] : terms_) {
    if (mask >> m) throw DomainError("blade mask exceeds the algebra dimension");
    if (!merged.empty() && merged.back().first == mask) {
      merged.back().second += c;
    } else {
      merged.emplace_back(mask, c);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.second.is_zero(); });
  terms_ = std::move(merged);
}

ExactMultivector ExactMultivector::scalar(int m, const ExactCoefficient& c) {
  return ExactMultivector(m, {{0u, c}});
}

ExactMultivector ExactMultivector::blade(int m, BladeMask mask, const ExactCoefficient& c) {
  return ExactMultivector(m, {{mask, c}});
}

ExactMultivector ExactMultivector::vector(int m, const std::vector<ExactCoefficient>& components) {
  if (static_cast<int>(components.size()) != m) throw SizeMismatch("vector component count");
  std::vector<Term> terms;
  for (int i = 0; i < m; ++i) terms.emplace_back(BladeMask{1} << i, components[i]);
  return ExactMultivector(m, std::move(terms));
}

ExactCoefficient ExactMultivector::coefficient(BladeMask mask) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                             [](const Term& t, BladeMask key) { return t.first < key; });
  if (it != terms_.end() && it->first == mask) return it->second;
  return {};
}

bool ExactMultivector::is_even() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return std::popcount(t.first) % 2 == 0; });
}

ExactMultivector ExactMultivector::reverse() const {
  ExactMultivector out = *this;
  for (auto& [mask, c] : out.terms_) {
    if (reverse_sign(mask) < 0) c = -c;
  }
  return out;
}

ExactMultivector ExactMultivector::involute() const {
  ExactMultivector out = *this;
  for (auto& [mask, c] : out.terms_) {
    if (std::popcount(mask) % 2 == 1) c = -c;
  }
  return out;
}

ExactMultivector ExactMultivector::operator-() const {
  ExactMultivector out = *this;
  for (auto& term : out.terms_) term.second = -term.second;
  return out;
}

ExactMultivector operator+(const ExactMultivector& x, const ExactMultivector& y) {
  require_same_dimension(x.m_, y.m_);
  std::vector<ExactMultivector::Term> terms = x.terms_;
  terms.insert(terms.end(), y.terms_.begin(), y.terms_.end());
  return ExactMultivector(x.m_, std::move(terms));
}

ExactMultivector operator-(const ExactMultivector& x, const ExactMultivector& y) { return x + (-y); }

ExactMultivector operator*(const ExactMultivector& x, const ExactMultivector& y) {
  require_same_dimension(x.m_, y.m_);
  Accumulator acc(x.m_);
  for (const auto& [a, ca] : x.terms_) {
    for (const auto& [b, cb] : y.terms_) {
      const ExactCoefficient c = ca * cb;
      acc.add(a ^ b, blade_product_sign(a, b) < 0 ? -c : c);
    }
  }
  ExactMultivector out(x.m_);
  out.terms_ = acc.collect();
  return out;
}

ExactSpinElement trusted_spin(ExactMultivector value) {
  return ExactSpinElement(std::move(value), ExactSpinElement::Trusted{});
}

ExactSpinElement::ExactSpinElement(ExactMultivector value) : value_(std::move(value)) {
  if (!value_.is_even()) throw DomainError("spin element must have even grade only");
  const auto norm = value_ * value_.reverse();
  if (norm != ExactMultivector::scalar(value_.dimension(), ExactCoefficient::integer(1))) {
    throw DomainError("spin element must satisfy z * reverse(z) = 1");
  }
}

ExactSpinElement ExactSpinElement::one(int m) {
  return trusted_spin(ExactMultivector::scalar(m, ExactCoefficient::integer(1)));
}

ExactSpinElement ExactSpinElement::minus_one(int m) {
  return trusted_spin(ExactMultivector::scalar(m, ExactCoefficient::integer(-1)));
}

ExactSpinElement ExactSpinElement::inverse() const { return trusted_spin(value_.reverse()); }

ExactSpinElement mul(const ExactSpinElement& x, const ExactSpinElement& y) {
  return trusted_spin(x.value_ * y.value_);
}

ExactSpinElement neg(const ExactSpinElement& z) { return trusted_spin(-z.value_); }

namespace {

// Exact images z e_j z^{-1}, one vector of m coefficients per column j.
std::vector<std::vector<ExactCoefficient>> exact_images(const ExactSpinElement& z) {
  const int m = z.dimension();
  const auto& value = z.multivector();
  const auto rev = value.reverse();
  std::vector<std::vector<ExactCoefficient>> cols(m, std::vector<ExactCoefficient>(m));
  for (int j = 0; j < m; ++j) {
    const auto image = value * ExactMultivector::blade(m, BladeMask{1} << j, ExactCoefficient::integer(1)) * rev;
    for (const auto& [mask, c] : image.terms()) {
      if (std::popcount(mask) != 1) throw Error("twisted adjoint image is not a vector");
      cols[j][std::countr_zero(mask)] = c;
    }
  }
  return cols;
}

}  // namespace

Eigen::MatrixXd pi_matrix(const ExactSpinElement& z) {
  const int m = z.dimension();
  const auto cols = exact_images(z);
  Eigen::MatrixXd out(m, m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) out(i, j) = cols[j][i].to_double();
  }
  return out;
}

std::optional<SignedPermutation> pi_signed(const ExactSpinElement& z) {
  const int m = z.dimension();
  const auto cols = exact_images(z);
  Eigen::MatrixXi entries = Eigen::MatrixXi::Zero(m, m);
  const auto plus = ExactCoefficient::integer(1);
  const auto minus = ExactCoefficient::integer(-1);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      const auto& c = cols[j][i];
      if (c.is_zero()) continue;
      if (c == plus) {
        entries(i, j) = 1;
      } else if (c == minus) {
        entries(i, j) = -1;
      } else {
        return std::nullopt;
      }
    }
  }
  return SignedPermutation::from_matrix(entries);
}

std::variant<SignedPermutation, Eigen::MatrixXd> pi(const ExactSpinElement& z) {
  if (auto q = pi_signed(z)) return *q;
  return pi_matrix(z);
}

ExactSpinElement canonical_lift(const SignedPermutation& q) {
  if (!q.in_weyl_group()) throw DomainError("canonical_lift requires determinant +1");
  const int m = q.size();
  SignedPermutation current = q;
  ExactMultivector product = ExactMultivector::scalar(m, ExactCoefficient::integer(1));
  for (int j = 1; j <= m; ++j) {
    // current e_j = sign * e_r with r >= j.
    const auto inv = current.inverse();
    const int r = inv.column(j);
    const int sigma = inv.sign(j);
    if (r == j && sigma == 1) continue;
    std::vector<int> reflection_word(m);
    for (int i = 1; i <= m; ++i) reflection_word[i - 1] = i;
    ExactMultivector u(m);
    if (r == j) {
      reflection_word[j - 1] = -j;
      u = ExactMultivector::blade(m, BladeMask{1} << (j - 1), ExactCoefficient::integer(1));
    } else {
      reflection_word[j - 1] = sigma * r;
      reflection_word[r - 1] = sigma * j;
      const auto h = ExactCoefficient::inv_sqrt2();
      u = ExactMultivector(m, {{BladeMask{1} << (r - 1), sigma > 0 ? h : -h},
                               {BladeMask{1} << (j - 1), -h}});
    }
    current = SignedPermutation(reflection_word) * current;
    product = product * u;
  }
  return trusted_spin(std::move(product));
}

ExactSpinElement w(int m, int s) {
  if (m < 1 || std::abs(s) > m || ((m - s) % 4 + 4) % 4 != 0) {
    throw DomainError("w(m, s) requires |s| <= m and s = m mod 4 (m=" + std::to_string(m) +
                      ", s=" + std::to_string(s) + ")");
  }
  ExactMultivector product = ExactMultivector::scalar(m, ExactCoefficient::integer(1));
  for (int i = 0; i < (m - s) / 4; ++i) {
    const BladeMask block = (BladeMask{1} << (2 * i)) | (BladeMask{1} << (2 * i + 1));
    product = product * ExactMultivector::blade(m, block, ExactCoefficient::integer(-1));
  }
  return trusted_spin(std::move(product));
}

ExactSpinElement tr_antipodal_witness(int m, int s) {
  if (std::abs(s) >= m || ((m - s) % 4 + 4) % 4 != 0) {
    throw DomainError("antipodal witness requires |s| < m and s = m mod 4");
  }
  const int small_blocks = (m - s) / 4 - 1;
  ExactMultivector product = ExactMultivector::scalar(m, ExactCoefficient::integer(1));
  for (int i = 0; i < small_blocks; ++i) {
    const BladeMask block = (BladeMask{1} << (2 * i)) | (BladeMask{1} << (2 * i + 1));
    product = product * ExactMultivector::blade(m, block, ExactCoefficient::integer(-1));
  }
  const int p = 2 * small_blocks;  // zero-based first coordinate of the 3x3 block
  const BladeMask large = (BladeMask{1} << p) | (BladeMask{1} << (p + 2));
  product = product * ExactMultivector::blade(m, large, ExactCoefficient::integer(-1));
  return trusted_spin(std::move(product));
}

long long spin_group_order(int m) { return 2 * weyl_group_order(m); }

void for_each_tilde_D(int m, const std::function<void(const ExactSpinElement&)>& visit, bool force) {
  if (m > kSpinEnumerationGuard && !force) {
    throw GuardExceeded("enumeration of the double cover of D_" + std::to_string(m) +
                        " exceeds the size guard " + std::to_string(kSpinEnumerationGuard));
  }
  for_each_D(
      m,
      [&](const SignedPermutation& q) {
        const auto z = canonical_lift(q);
        visit(z);
        visit(neg(z));
      },
      true);
}

std::vector<ExactSpinElement> enumerate_tilde_D(int m, bool force) {
  std::vector<ExactSpinElement> out;
  for_each_tilde_D(m, [&](const ExactSpinElement& z) { out.push_back(z); }, force);
  return out;
}

namespace {

BladeMask even_axes(int m) {
  BladeMask mask = 0;
  for (int i = 1; i < m; i += 2) mask |= BladeMask{1} << i;
  return mask;
}

}  // namespace

ExactSpinElement tr_spin(const ExactSpinElement& z) {
  const int m = z.dimension();
  const auto j = ExactMultivector::blade(m, even_axes(m), ExactCoefficient::integer(1));
  const auto& value = z.multivector();
  return trusted_spin(j * value.reverse() * j.reverse());
}

ExactSpinElement ad_spin(const ExactSpinElement& z) {
  const auto a = canonical_lift(SignedPermutation::antidiagonal(z.dimension()));
  return mul(mul(a.inverse(), z), a);
}

double coefficient_distance(const ExactSpinElement& x, const ExactSpinElement& y) {
  require_same_dimension(x.dimension(), y.dimension());
  const auto diff = x.multivector() - y.multivector();
  double out = 0.0;
  for (const auto& term : diff.terms()) out = std::max(out, std::abs(term.second.to_double()));
  return out;
}

}  // namespace lcurve
