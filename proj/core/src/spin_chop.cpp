#include "lcurve/spin_chop.hpp"

#include <array>

#include "lcurve/errors.hpp"

namespace lcurve {

namespace {

SignedPermutation require_over_D(const ExactSpinElement& z) {
  const auto q = pi_signed(z);
  if (!q) throw DomainError("element does not lie over D_m");
  return *q;
}

}  // namespace

ExactSpinElement chop_spin_direct(const ExactSpinElement& z, double h, const TridiagonalLog& log) {
  const SignedPermutation q = require_over_D(z);
  const int m = q.size();
  if (log.dimension() != m) throw SizeMismatch("tridiagonal log has the wrong size");
  const MatrixX<Wide> germ = germ_frame_wide(q, h, log);
  const SpinNumeric start = SpinNumeric::from_exact(z) * SpinNumeric::exp_of_skew(-h * log.matrix<double>());
  const auto lifted = lift_to_representative(germ, start, Wide(kWidePivotFloor));
  if (lifted.q0 != chop_rep(q)) {
    throw Error("germ of " + q.to_string() + " enters cell " + lifted.q0.to_string() + ", not " +
                chop_rep(q).to_string());
  }
  return lifted.element;
}

SignedPermutation chop_base(const SignedPermutation& q) {
  std::vector<int> word(q.size());
  for (int i = 1; i <= q.size(); ++i) word[i - 1] = q.column(i);
  SignedPermutation base(word);
  if (!base.in_weyl_group()) {
    word[0] = -word[0];
    base = SignedPermutation(std::move(word));
  }
  return base;
}

SpinChopper::SpinChopper(int m, double h) : SpinChopper(m, h, TridiagonalLog::ones(m)) {}

SpinChopper::SpinChopper(int m, double h, TridiagonalLog log) : m_(m), h_(h), log_(std::move(log)) {
  if (m < 2) throw DomainError("chop needs m >= 2");
  if (log_.dimension() != m) throw SizeMismatch("tridiagonal log has the wrong size");
  a_ = chop(ExactSpinElement::one(m));
  a_inverse_ = a_.inverse();
}

const ExactSpinElement& SpinChopper::base_chop(const SignedPermutation& base) const {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(base);
  if (it == cache_.end()) {
    it = cache_.emplace(base, chop_spin_direct(canonical_lift(base), h_, log_)).first;
  }
  return it->second;
}

ExactSpinElement SpinChopper::chop(const ExactSpinElement& z) const {
  if (z.dimension() != m_) throw SizeMismatch("element has the wrong size for this chopper");
  const SignedPermutation q = require_over_D(z);
  const SignedPermutation base = chop_base(q);
  const SignedPermutation d = q * base.inverse();
  const ExactSpinElement d_lift = canonical_lift(d);
  const ExactSpinElement candidate = d_lift * canonical_lift(base);
  const ExactSpinElement& c = base_chop(base);
  if (candidate == z) return d_lift * c;
  return neg(d_lift * c);
}

ExactSpinElement SpinChopper::delta(const ExactSpinElement& z) const { return chop(z) * a_inverse_; }

int SpinChopper::numeric_evaluations() const {
  std::lock_guard lock(mutex_);
  return static_cast<int>(cache_.size());
}

const SpinChopper& default_chopper(int m) {
  static std::array<std::once_flag, kSpinEnumerationGuard + 2> flags;
  static std::array<std::unique_ptr<SpinChopper>, kSpinEnumerationGuard + 2> choppers;
  if (m < 2 || m > kSpinEnumerationGuard + 1) throw GuardExceeded("no default chopper for this size");
  std::call_once(flags[m], [m] { choppers[m] = std::make_unique<SpinChopper>(m); });
  return *choppers[m];
}

ExactSpinElement chop_spin(const ExactSpinElement& z) { return default_chopper(z.dimension()).chop(z); }

ExactSpinElement delta_spin(const ExactSpinElement& z) { return default_chopper(z.dimension()).delta(z); }

int s_spin(const ExactSpinElement& z) {
  const auto d = pi_signed(delta_spin(z));
  if (!d) throw Error("delta_spin left the double cover");
  return d->to_int_matrix().trace();
}

}  // namespace lcurve
