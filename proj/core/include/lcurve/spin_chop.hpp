#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "lcurve/clifford_exact.hpp"
#include "lcurve/curves.hpp"

namespace lcurve {

inline constexpr double kDefaultChopOffset = 1e-2;

// Cell representative of the lifted germ z exp(-h L^) just before an endpoint
// with spin frame z, found by homotopy lifting. Throws if the germ cell
// disagrees with Delta(Q) A.
ExactSpinElement chop_spin_direct(const ExactSpinElement& z, double h, const TridiagonalLog& log);

// chop on the double cover, memoized per signless permutation; other
// elements follow from chop(d z) = d chop(z) for d over Diag_m and chop(-z) = -chop(z).
class SpinChopper {
 public:
  explicit SpinChopper(int m, double h = kDefaultChopOffset);
  SpinChopper(int m, double h, TridiagonalLog log);

  int dimension() const { return m_; }
  ExactSpinElement chop(const ExactSpinElement& z) const;
  // chop(z) a^{-1}.
  ExactSpinElement delta(const ExactSpinElement& z) const;
  // chop(1); projects to A.
  const ExactSpinElement& a() const { return a_; }
  int numeric_evaluations() const;

 private:
  const ExactSpinElement& base_chop(const SignedPermutation& base) const;

  int m_;
  double h_;
  TridiagonalLog log_;
  ExactSpinElement a_;
  ExactSpinElement a_inverse_;
  mutable std::mutex mutex_;
  mutable std::map<SignedPermutation, ExactSpinElement> cache_;
};

// The permutation matrix of the signless permutation of q, with the first row
// negated if that is needed for determinant +1.
SignedPermutation chop_base(const SignedPermutation& q);

// Shared default choppers, one per size.
const SpinChopper& default_chopper(int m);
ExactSpinElement chop_spin(const ExactSpinElement& z);
ExactSpinElement delta_spin(const ExactSpinElement& z);
int s_spin(const ExactSpinElement& z);

}  // namespace lcurve
