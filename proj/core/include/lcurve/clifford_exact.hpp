#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "lcurve/exact_coefficient.hpp"
#include "lcurve/signed_perm.hpp"

namespace lcurve {

// Bit i set <=> e_{i+1} is a factor of the blade (factors in ascending order).
using BladeMask = std::uint32_t;

// Sign of the reordering e_a e_b -> +-e_{a xor b} with e_i^2 = +1.
int blade_product_sign(BladeMask a, BladeMask b);

// Sparse multivector of Cl(R^m) with exact coefficients; terms sorted by mask.
class ExactMultivector {
 public:
  using Term = std::pair<BladeMask, ExactCoefficient>;

  ExactMultivector() = default;
  explicit ExactMultivector(int m) : m_(m) {}
  ExactMultivector(int m, std::vector<Term> terms);

  static ExactMultivector scalar(int m, const ExactCoefficient& c);
  static ExactMultivector blade(int m, BladeMask mask, const ExactCoefficient& c);
  // sum_i c_i e_{i+1}
  static ExactMultivector vector(int m, const std::vector<ExactCoefficient>& components);

  int dimension() const { return m_; }
  const std::vector<Term>& terms() const { return terms_; }
  ExactCoefficient coefficient(BladeMask mask) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_even() const;

  ExactMultivector reverse() const;
  // Grade involution: negates odd blades.
  ExactMultivector involute() const;
  ExactMultivector operator-() const;

  friend ExactMultivector operator+(const ExactMultivector& x, const ExactMultivector& y);
  friend ExactMultivector operator-(const ExactMultivector& x, const ExactMultivector& y);
  friend ExactMultivector operator*(const ExactMultivector& x, const ExactMultivector& y);

  friend bool operator==(const ExactMultivector&, const ExactMultivector&) = default;
  friend auto operator<=>(const ExactMultivector&, const ExactMultivector&) = default;

 private:
  int m_ = 0;
  std::vector<Term> terms_;
};

// Even unit element (z * reverse(z) = 1) of Cl(R^m), i.e. a point of Spin(m).
class ExactSpinElement {
 public:
  ExactSpinElement() = default;
  // Validates grade parity and unit norm.
  explicit ExactSpinElement(ExactMultivector value);

  static ExactSpinElement one(int m);
  static ExactSpinElement minus_one(int m);

  int dimension() const { return value_.dimension(); }
  const ExactMultivector& multivector() const { return value_; }
  ExactSpinElement inverse() const;

  friend bool operator==(const ExactSpinElement&, const ExactSpinElement&) = default;
  friend auto operator<=>(const ExactSpinElement&, const ExactSpinElement&) = default;

 private:
  struct Trusted {};
  ExactSpinElement(ExactMultivector value, Trusted) : value_(std::move(value)) {}
  friend ExactSpinElement mul(const ExactSpinElement&, const ExactSpinElement&);
  friend ExactSpinElement neg(const ExactSpinElement&);
  friend ExactSpinElement trusted_spin(ExactMultivector);

  ExactMultivector value_;
};

ExactSpinElement mul(const ExactSpinElement& x, const ExactSpinElement& y);
inline ExactSpinElement operator*(const ExactSpinElement& x, const ExactSpinElement& y) {
  return mul(x, y);
}
ExactSpinElement neg(const ExactSpinElement& z);

// Column j of the result is z e_j z^{-1}.
Eigen::MatrixXd pi_matrix(const ExactSpinElement& z);
// The projection when it is a signed permutation, i.e. when z lies in the double cover of D_m.
std::optional<SignedPermutation> pi_signed(const ExactSpinElement& z);
std::variant<SignedPermutation, Eigen::MatrixXd> pi(const ExactSpinElement& z);

// Deterministic lift of any determinant +1 signed permutation, built as the
// product of the reflections that reduce it to the identity column by column.
ExactSpinElement canonical_lift(const SignedPermutation& q);

// Endpoint of the lift from 1 of the block-rotation path ending at M^m_s:
// the product over the (m-s)/4 blocks of exp(-pi/2 e_{2i-1} e_{2i}) = -e_{2i-1} e_{2i}.
ExactSpinElement w(int m, int s);

// Endpoint of the lift from 1 of the path made of (m-s)/4 - 1 half-turn blocks
// in planes (2i-1, 2i) followed by one half-turn in the plane (p, p+2) of a
// 3x3 block; its image is diagonal with trace s and tr_spin(z) = -z.
ExactSpinElement tr_antipodal_witness(int m, int s);

inline constexpr int kSpinEnumerationGuard = 7;

long long spin_group_order(int m);
// canonical_lift(Q), then its negative, for Q in the D_m enumeration order.
void for_each_tilde_D(int m, const std::function<void(const ExactSpinElement&)>& visit,
                      bool force = false);
std::vector<ExactSpinElement> enumerate_tilde_D(int m, bool force = false);

// Lift of TR fixing 1: j reverse(z) j^{-1} with j = e_2 e_4 ... in Pin(m).
ExactSpinElement tr_spin(const ExactSpinElement& z);
// a^{-1} z a for a lift a of the antidiagonal A (independent of which lift).
ExactSpinElement ad_spin(const ExactSpinElement& z);

// Largest coefficient-wise distance between two elements of the same size.
double coefficient_distance(const ExactSpinElement& x, const ExactSpinElement& y);

}  // namespace lcurve
