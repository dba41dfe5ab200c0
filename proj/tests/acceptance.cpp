// Acceptance checks, one line per criterion.
//
//   acceptance          run all ten
//   acceptance 3 7      run the listed ones
//
// Exit status is 0 only when every requested criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "neoclassical/boundary_functions.hpp"
#include "neoclassical/identities.hpp"
#include "neoclassical/special_functions.hpp"

using namespace neoclassical;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

std::vector<double> tenths(int from, int to, bool skip_one) {
  std::vector<double> out;
  for (int k = from; k <= to; ++k) {
    if (skip_one && k == 10) continue;
    out.push_back(k / 10.0);
  }
  return out;
}

// 1: identity on the alpha x n x lambda grid at rel_err <= 1e-8. The grid as
// defined has 18 * 10 * 10 = 1800 points; the quoted count of 1710 is not used.
Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  int points = 0;
  int failed = 0;
  double worst = 0.0;
  for (double alpha : tenths(1, 19, true)) {
    for (int n = 1; n <= 10; ++n) {
      for (double lambda : tenths(1, 10, false)) {
        const IdentityReport r = verify_neo3({alpha, n, lambda}, 1e-8);
        ++points;
        worst = std::max(worst, r.rel_err);
        if (!(r.rel_err <= 1e-8)) ++failed;
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {failed == 0 && secs < 60.0,
          fmt("%d points, %d failed, worst rel_err %.2e, %.2f s", points, failed, worst, secs)};
}

// 2: closed forms of R.
Outcome criterion2() {
  double worst = 0.0;
  for (double alpha : {0.3, 0.5, 0.7, 1.5}) {
    for (double lambda : {0.5, 1.0}) {
      const double closed = std::pow(1.0 + lambda, alpha) - alpha * (1.0 + std::pow(lambda, alpha));
      worst = std::max(worst, std::abs(residual_R({alpha, 1, lambda}) - closed));
    }
  }
  const double r1 = residual_R({0.5, 1, 1.0});
  const double r2 = residual_R({0.5, 2, 1.0});
  const double e1 = std::abs(r1 - (std::sqrt(2.0) - 1.0));
  const double e2 = std::abs(r2 - (1.0 - 2.0 / kPi));
  const bool ok = worst <= 1e-9 && e1 <= 1e-9 && e2 <= 1e-9;
  return {ok, fmt("n=1 worst %.2e; R(0.5,1,1) err %.2e; R(0.5,2,1) err %.2e", worst, e1, e2)};
}

// 3: orderings over 1000 random inputs, zeros included on purpose.
Outcome criterion3() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int bad_less = 0;
  int bad_equal = 0;
  int bad_greater = 0;
  int one_zero_above_one = 0;
  for (int i = 0; i < 1000; ++i) {
    const double u = unit(rng);
    const double alpha = u < 0.1 ? 1.0 : 0.01 + 1.98 * unit(rng);
    const int n = 1 + static_cast<int>(10 * unit(rng));
    const double zx = unit(rng);
    const double zy = unit(rng);
    const double x = zx < 0.08 ? 0.0 : 4.0 * unit(rng);
    const double y = zy < 0.08 ? 0.0 : 4.0 * unit(rng);
    const Ordering o = check_inequality(alpha, n, x, y).ordering;
    const bool origin = x == 0.0 && y == 0.0;
    const bool both_positive = x > 0.0 && y > 0.0;
    if ((o == Ordering::strict_less) != (alpha > 0.0 && alpha < 1.0 && !origin)) ++bad_less;
    if ((o == Ordering::equal) != (alpha == 1.0 || origin)) ++bad_equal;
    if ((o == Ordering::strict_greater) != (alpha > 1.0 && alpha < 2.0 && both_positive)) {
      ++bad_greater;
      if (!origin && !both_positive) ++one_zero_above_one;
    }
  }
  return {bad_less == 0 && bad_equal == 0 && bad_greater == 0,
          fmt("mismatches: strict_less %d, equal %d, strict_greater %d "
              "(%d of them alpha in (1,2) with exactly one of x, y zero)",
              bad_less, bad_equal, bad_greater, one_zero_above_one)};
}

// 4: sign bounds on the criterion-1 grid and |R(n)| <= |R(1)|.
Outcome criterion4() {
  int bound_failures = 0;
  int first_failures = 0;
  for (double alpha : tenths(1, 19, true)) {
    for (double lambda : tenths(1, 10, false)) {
      const double first = residual_R({alpha, 1, lambda});
      for (int n = 1; n <= 10; ++n) {
        const double r = residual_R({alpha, n, lambda});
        const bool inside = alpha < 1.0 ? (0.0 < r && r < 1.0 - alpha) : (0.0 > r && r > 1.0 - alpha);
        if (!inside) ++bound_failures;
        if (!(std::abs(r) <= std::abs(first))) ++first_failures;
      }
    }
  }
  return {bound_failures == 0 && first_failures == 0,
          fmt("bound violations %d, |R(n)| > |R(1)| at %d points", bound_failures, first_failures)};
}

// 5: strict decrease of |R| for n = 1..20 and halving by n = 20.
Outcome criterion5() {
  bool ok = true;
  std::string detail;
  for (double alpha : {0.3, 0.5, 0.9, 1.5}) {
    for (double lambda : {0.5, 1.0}) {
      const std::vector<double> r = r_monotonicity_scan(alpha, lambda, 20);
      bool decreasing = true;
      for (std::size_t i = 1; i < r.size(); ++i) {
        decreasing = decreasing && std::abs(r[i]) < std::abs(r[i - 1]);
      }
      const double ratio = std::abs(r.back()) / std::abs(r.front());
      const bool halved = ratio < 0.5;
      if (!decreasing || !halved) {
        ok = false;
        detail += fmt("[alpha=%g lambda=%g decreasing=%s |R20|/|R1|=%.4f] ", alpha, lambda,
                      decreasing ? "yes" : "no", ratio);
      }
    }
  }
  if (ok) detail = "all 8 sequences strictly decreasing and halved by n=20";
  return {ok, detail};
}

// 6: quadrature f# against the closed form.
Outcome criterion6() {
  double worst = 0.0;
  for (double t : {0.5, 1.0, 2.5, 5.0}) {
    const BoundaryFunction f = BoundaryFunction::binomial(t);
    for (double xi : {-5.0, -1.3, 0.0, 0.7, 2.0, 7.1}) {
      worst = std::max(worst, std::abs(fsharp(f, xi, 1e-10).value - gen_binom(t, xi)));
    }
  }
  return {worst <= 1e-8, fmt("24 coefficients, worst abs err %.2e", worst)};
}

// 7: t1, t2, t3 at rel_err <= 1e-7 and the kernel merge at 32 points.
Outcome criterion7() {
  const std::vector<BoundaryFunction> fs{BoundaryFunction::binomial(1.0),
                                         BoundaryFunction::binomial(3.0),
                                         BoundaryFunction::exponential()};
  int checks = 0;
  int failed = 0;
  double worst = 0.0;
  double worst_merge = 0.0;
  for (const BoundaryFunction& f : fs) {
    for (double alpha : {0.3, 0.7, 1.3, 1.9}) {
      for (double lambda : {0.25, 0.5, 0.9}) {
        for (TaylorIdentity w : {TaylorIdentity::t1, TaylorIdentity::t2, TaylorIdentity::t3}) {
          const IdentityReport r = verify_taylor(w, f, alpha, lambda, 0.0, 1e-7);
          ++checks;
          worst = std::max(worst, r.rel_err);
          if (!(r.rel_err <= 1e-7) || !r.passed) ++failed;
          if (w == TaylorIdentity::t3) {
            worst_merge = std::max(worst_merge, r.pieces.at("kernel_merge_max_err"));
          }
        }
      }
    }
  }
  return {failed == 0 && worst_merge <= 1e-12,
          fmt("%d checks, %d failed, worst rel_err %.2e, worst kernel merge %.2e", checks, failed,
              worst, worst_merge)};
}

// 8: bilateral binomial sums.
Outcome criterion8() {
  double worst = 0.0;
  for (double alpha : {0.25, 0.5, 1.5}) {
    for (int n = 1; n <= 3; ++n) {
      const IdentityReport r = verify_osler(alpha, n, 1e-6);
      const double rel = std::abs(r.lhs.real() - std::pow(2.0, alpha * n)) / std::pow(2.0, alpha * n);
      worst = std::max(worst, rel);
    }
  }
  return {worst <= 1e-6, fmt("9 sums, worst rel_err %.2e", worst)};
}

// 9: the K_alpha identity, its sign pattern, and the alpha = 2 spot value.
Outcome criterion9() {
  int failed = 0;
  int sign_mismatch = 0;
  double worst = 0.0;
  for (double alpha : {2.0, 2.5, 3.0, 3.5, 4.0}) {
    for (int n = 1; n <= 2; ++n) {
      for (double lambda : {0.5, 1.0}) {
        const IdentityReport r = verify_neo3A({alpha, n, lambda}, 1e-7);
        worst = std::max(worst, r.rel_err);
        if (!(r.rel_err <= 1e-7)) ++failed;
        const double k = r.pieces.at("kalpha_sum");
        const double diff = r.lhs.real() - k;
        SignClass observed = SignClass::zero;
        if (std::abs(diff) > 1e-12 * std::max(1.0, std::abs(k))) {
          observed = diff < 0.0 ? SignClass::negative : SignClass::positive;
        }
        if (observed != sign_classify(alpha)) ++sign_mismatch;
      }
    }
  }
  const IdentityReport spot = verify_neo3A({2.0, 1, 1.0}, 1e-12);
  const bool spot_ok = std::abs(spot.lhs.real() - 4.0) <= 1e-12 &&
                       std::abs(spot.rhs.real() - 4.0) <= 1e-12;
  return {failed == 0 && sign_mismatch == 0 && spot_ok,
          fmt("20 points, %d failed, worst rel_err %.2e, sign mismatches %d, "
              "alpha=2 n=1 lambda=1: lhs %.15g rhs %.15g",
              failed, worst, sign_mismatch, spot.lhs.real(), spot.rhs.real())};
}

// 10: symmetry on 1000 samples and |xi|^(T+1) decay.
Outcome criterion10() {
  std::mt19937_64 rng(7741);
  std::uniform_real_distribution<double> pick_t(0.05, 10.0);
  std::uniform_real_distribution<double> pick_xi(-60.0, 60.0);
  int asym = 0;
  for (int i = 0; i < 1000; ++i) {
    const double t = pick_t(rng);
    const double xi = pick_xi(rng);
    const double a = gen_binom(t, xi);
    if (std::abs(a - gen_binom(t, t - xi)) > 1e-12 * std::max(1.0, std::abs(a))) ++asym;
  }

  // The ratio vanishes at poles, so the reference is its sup over |xi| in [20, 21].
  const auto ratio = [](double t, double xi) {
    return std::abs(gen_binom(t, xi)) * std::pow(std::abs(xi), t + 1.0);
  };
  double worst_factor = 0.0;
  for (double t : {0.5, 1.5, 3.0}) {
    double ref = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double m = 20.0 + i / 1000.0;
      ref = std::max({ref, ratio(t, m), ratio(t, -m)});
    }
    for (int i = 0; i <= 180000; ++i) {
      const double m = 20.0 + i / 1000.0;
      worst_factor = std::max({worst_factor, ratio(t, m) / ref, ratio(t, -m) / ref});
    }
  }
  return {asym == 0 && worst_factor <= 10.0,
          fmt("symmetry violations %d/1000, worst decay ratio / reference %.3f", asym,
              worst_factor)};
}

const std::vector<std::function<Outcome()>> kCriteria = {
    criterion1, criterion2, criterion3, criterion4, criterion5,
    criterion6, criterion7, criterion8, criterion9, criterion10};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty()) {
    for (int c = 1; c <= static_cast<int>(kCriteria.size()); ++c) which.push_back(c);
  }
  bool all = true;
  for (int c : which) {
    if (c < 1 || c > static_cast<int>(kCriteria.size())) {
      std::fprintf(stderr, "unknown criterion %d\n", c);
      return 2;
    }
    Outcome o;
    try {
      o = kCriteria[c - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %2d %s  %s\n", c, o.passed ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
