#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace lcurve {

// (a + b sqrt(2)) / 2^k, kept with k minimal so equal values compare equal.
class ExactCoefficient {
 public:
  constexpr ExactCoefficient() = default;
  ExactCoefficient(std::int64_t a, std::int64_t b, int k);

  static ExactCoefficient integer(std::int64_t a) { return {a, 0, 0}; }
  // 1/sqrt(2) = sqrt(2)/2.
  static ExactCoefficient inv_sqrt2() { return {0, 1, 1}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  int k() const { return k_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  double to_double() const;
  std::string to_string() const;

  ExactCoefficient operator-() const { return {-a_, -b_, k_}; }
  friend ExactCoefficient operator+(const ExactCoefficient& x, const ExactCoefficient& y);
  friend ExactCoefficient operator-(const ExactCoefficient& x, const ExactCoefficient& y);
  friend ExactCoefficient operator*(const ExactCoefficient& x, const ExactCoefficient& y);
  ExactCoefficient& operator+=(const ExactCoefficient& y) { return *this = *this + y; }

  friend bool operator==(const ExactCoefficient&, const ExactCoefficient&) = default;
  friend auto operator<=>(const ExactCoefficient&, const ExactCoefficient&) = default;

 private:
  void normalize();

  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  int k_ = 0;
};

}  // namespace lcurve
