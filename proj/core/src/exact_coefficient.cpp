#include "lcurve/exact_coefficient.hpp"

#include <cmath>
#include <numbers>

#include "lcurve/errors.hpp"

namespace lcurve {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error("exact coefficient overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace

ExactCoefficient::ExactCoefficient(std::int64_t a, std::int64_t b, int k) : a_(a), b_(b), k_(k) {
  if (k < 0) throw DomainError("exact coefficient exponent must be nonnegative");
  normalize();
}

void ExactCoefficient::normalize() {
  if (a_ == 0 && b_ == 0) {
    k_ = 0;
    return;
  }
  while (k_ > 0 && a_ % 2 == 0 && b_ % 2 == 0) {
    a_ /= 2;
    b_ /= 2;
    --k_;
  }
}

double ExactCoefficient::to_double() const {
  return std::ldexp(static_cast<double>(a_) + static_cast<double>(b_) * std::numbers::sqrt2, -k_);
}

std::string ExactCoefficient::to_string() const {
  std::string out = "(" + std::to_string(a_) + (b_ < 0 ? "-" : "+") + std::to_string(b_ < 0 ? -b_ : b_) +
                    "*sqrt2)";
  if (k_ > 0) out += "/2^" + std::to_string(k_);
  return out;
}

ExactCoefficient operator+(const ExactCoefficient& x, const ExactCoefficient& y) {
  const int k = std::max(x.k_, y.k_);
  const __int128 sx = static_cast<__int128>(1) << (k - x.k_);
  const __int128 sy = static_cast<__int128>(1) << (k - y.k_);
  return {checked(x.a_ * sx + y.a_ * sy), checked(x.b_ * sx + y.b_ * sy), k};
}

ExactCoefficient operator-(const ExactCoefficient& x, const ExactCoefficient& y) { return x + (-y); }

ExactCoefficient operator*(const ExactCoefficient& x, const ExactCoefficient& y) {
  const __int128 a = static_cast<__int128>(x.a_) * y.a_ + 2 * static_cast<__int128>(x.b_) * y.b_;
  const __int128 b = static_cast<__int128>(x.a_) * y.b_ + static_cast<__int128>(x.b_) * y.a_;
  return {checked(a), checked(b), x.k_ + y.k_};
}

}  // namespace lcurve
