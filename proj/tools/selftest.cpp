#include "selftest.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "lcurve/bruhat.hpp"
#include "lcurve/classify.hpp"
#include "lcurve/clifford_exact.hpp"
#include "lcurve/curves.hpp"
#include "lcurve/signed_perm.hpp"
#include "lcurve/spin_chop.hpp"
#include "lcurve/spin_numeric.hpp"

namespace lcurve::cli {

namespace {

Eigen::MatrixXd random_skew(int m, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> normal(0.0, scale);
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      x(i, j) = normal(rng);
      x(j, i) = -x(i, j);
    }
  }
  return x;
}

class Suite {
 public:
  Suite(std::vector<SuiteResult>& out, std::string module, std::string check) : out_(out) {
    result_.module = std::move(module);
    result_.check = std::move(check);
  }
  ~Suite() { out_.push_back(result_); }

  void expect(const std::function<bool()>& test) {
    ++result_.total;
    try {
      if (test()) ++result_.passed;
    } catch (const std::exception&) {
    }
  }

 private:
  std::vector<SuiteResult>& out_;
  SuiteResult result_;
};

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed, int samples) {
  std::vector<SuiteResult> results;
  std::mt19937_64 rng(seed);

  {
    Suite suite(results, "signed_perm", "|D_m| = 2^(m-1) m! for m <= 6");
    for (int m = 1; m <= 6; ++m) {
      suite.expect([m] { return static_cast<long long>(enumerate_D(m).size()) == weyl_group_order(m); });
    }
  }
  {
    Suite suite(results, "signed_perm", "TR and AD agree with conjugation, m <= 5");
    for (int m = 2; m <= 5; ++m) {
      for_each_D(m, [&](const SignedPermutation& q) {
        suite.expect([&] {
          return tr(q) == tr_by_conjugation(q) && ad(q) == ad_by_conjugation(q) && tr(tr(q)) == q;
        });
      });
    }
  }
  {
    Suite suite(results, "clifford_exact", "Pi is a 2:1 homomorphism onto D_m, m <= 5");
    for (int m = 2; m <= 5; ++m) {
      const auto all = enumerate_tilde_D(m);
      suite.expect([&] { return static_cast<long long>(all.size()) == spin_group_order(m); });
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      for (int k = 0; k < samples / 4 + 1; ++k) {
        const auto& x = all[pick(rng)];
        const auto& y = all[pick(rng)];
        suite.expect([&] {
          return *pi_signed(x * y) == *pi_signed(x) * *pi_signed(y) && *pi_signed(neg(x)) == *pi_signed(x) &&
                 *pi_signed(canonical_lift(*pi_signed(x))) == *pi_signed(x);
        });
      }
    }
  }
  {
    Suite suite(results, "spin_numeric", "Pi(exp of bivector) = exp(X)");
    for (int k = 0; k < samples; ++k) {
      const int m = 2 + k % 5;
      const Eigen::MatrixXd x = random_skew(m, rng, 1.0);
      suite.expect([&] {
        return (pi_matrix(SpinNumeric::exp_of_skew(x)) - expm<double>(x)).norm() < 1e-10;
      });
    }
  }
  {
    Suite suite(results, "spin_numeric", "a full turn lifts to -1");
    for (int m = 2; m <= 6; ++m) {
      suite.expect([m] {
        Eigen::MatrixXd x = Eigen::MatrixXd::Zero(m, m);
        x(1, 0) = 2.0 * M_PI;
        x(0, 1) = -2.0 * M_PI;
        const auto lift = lift_continuous([&](double t) { return expm<double>(Eigen::MatrixXd(t * x)); }, 0.0,
                                          1.0, SpinNumeric::one(m));
        return snap_to_exact(lift.endpoint).element == ExactSpinElement::minus_one(m);
      });
    }
  }
  {
    Suite suite(results, "bruhat", "random rotations factor through the top cell");
    for (int k = 0; k < samples; ++k) {
      const int m = 2 + k % 6;
      const Eigen::MatrixXd q = random_rotation(m, rng);
      suite.expect([&] {
        const auto d = decompose(q);
        bool big_cell = true;
        for (int i = 1; i <= m; ++i) big_cell = big_cell && d.q0.column(i) == m + 1 - i;
        return d.residual < 1e-9 && is_upper_positive(d.u1) && big_cell;
      });
    }
  }
  {
    Suite suite(results, "curves", "random spirals are locally convex with orthonormal frames");
    for (int k = 0; k < samples / 10 + 1; ++k) {
      const int n = 1 + k % 5;
      const CurveSpec spec = CurveSpec::random(n, rng);
      suite.expect([&] {
        for (int i = 0; i <= 20; ++i) {
          const double t = i / 20.0;
          if (!(wronskian(spec, t) > 0.0) || orthogonality_error(frenet(spec, t)) > 1e-8) return false;
        }
        return true;
      });
    }
  }
  {
    Suite suite(results, "spin_chop", "germ cells equal Delta(Q) A, m <= 4");
    for (int m = 2; m <= 4; ++m) {
      for_each_D(m, [&](const SignedPermutation& q) {
        suite.expect([&] { return germ_cell(q, kDefaultChopOffset, TridiagonalLog::ones(m)) == chop_rep(q); });
      });
    }
  }
  {
    Suite suite(results, "classify", "class counts, SO m <= 6 and Spin m <= 4");
    for (int m = 2; m <= 6; ++m) suite.expect([m] { return so_classes(m).passed(); });
    for (int m = 2; m <= 4; ++m) suite.expect([m] { return spin_classes(m).passed(); });
  }
  return results;
}

}  // namespace lcurve::cli
