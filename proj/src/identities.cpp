#include "neoclassical/identities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "neoclassical/errors.hpp"
#include "neoclassical/quadrature.hpp"

namespace neoclassical {

namespace {

constexpr double kPi = std::numbers::pi;

// Share of a report's tolerance spent on the numerics behind each side.
constexpr double kBudgetShare = 0.05;

void require(bool ok, const char* what) {
  if (!ok) throw PreconditionError(what);
}

void require_lambda(double lambda) {
  require(lambda > 0.0 && lambda <= 1.0, "lambda must lie in (0, 1]");
}

// Neumaier summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// int_0^1 t^(a-1) f(-t) w(t) dt for complex-valued f on the real segment.
cplx radial_complex(const BoundaryFunction& f, double a, const std::function<double(double)>& w,
                    double tol, double& error) {
  RadialIntegrand re{a, [&](double t) { return f(cplx(-t, 0.0)).real() * w(t); }, "Re f(-t) w"};
  RadialIntegrand im{a, [&](double t) { return f(cplx(-t, 0.0)).imag() * w(t); }, "Im f(-t) w"};
  const QuadratureResult r = integrate_radial(re, 0.5 * tol);
  const QuadratureResult i = integrate_radial(im, 0.5 * tol);
  error = r.error + i.error;
  return {r.value, i.value};
}

enum class Side { nonneg, neg };

SeriesSum taylor_series(const BoundaryFunction& f, double alpha, double lambda, double gamma,
                        double tol, Side side) {
  require(alpha > 0.0 && std::isfinite(alpha), "alpha must be positive");
  require_lambda(lambda);
  require(gamma < alpha, "gamma must be below alpha");
  require(tol > 0.0, "tol must be positive");

  if (lambda == 1.0) {
    const auto exponent = f.binomial_exponent();
    if (!exponent) {
      throw PreconditionError(
          "lambda = 1 needs absolutely summable coefficients; only (1+z)^T is certified");
    }
    const double t = *exponent;
    const RaySum r = side == Side::nonneg
                         ? binomial_ray_sum(t, alpha, gamma - t, 0, 0.5 * tol / alpha)
                         : binomial_ray_sum(t, alpha, -gamma, 1, 0.5 * tol / alpha);
    SeriesSum out;
    out.value = alpha * r.value;
    out.terms = r.direct_terms;
    out.truncation_bound = alpha * r.tail_bound;
    return out;
  }

  const std::int64_t first = side == Side::nonneg ? 0 : 1;
  const double ratio = std::pow(lambda, alpha);
  const double sup = f.sup_bound();
  std::int64_t stop = first;  // terms first .. stop-1 are summed
  double bound = 0.0;
  if (ratio > 0.0 && sup > 0.0) {
    const double need = 0.5 * tol * (1.0 - ratio) / (alpha * sup);
    const double j = std::ceil(std::log(need) / std::log(ratio));
    if (!(j <= static_cast<double>(kMaxSeriesTerms))) {
      throw TruncationError("taylor series: no J <= 1e6 meets the tail bound");
    }
    stop = std::max<std::int64_t>(first, static_cast<std::int64_t>(std::max(j, 0.0)));
    bound = alpha * sup * std::pow(ratio, static_cast<double>(stop)) / (1.0 - ratio);
  } else if (side == Side::nonneg) {
    stop = 1;  // lambda^alpha underflows: only j = 0 survives
  }

  const double coefficient_tol = std::max(1e-15, 0.5 * tol * (1.0 - ratio) / alpha);
  cplx sum{0.0, 0.0};
  double coefficient_error = 0.0;
  for (std::int64_t k = first; k < stop; ++k) {
    const double kk = static_cast<double>(k);
    const double xi = side == Side::nonneg ? alpha * kk + gamma : -alpha * kk + gamma;
    const double weight = std::pow(lambda, alpha * kk);
    const FracCoefficient c = fsharp(f, xi, coefficient_tol);
    sum += weight * c.value;
    coefficient_error += weight * c.quad_error_estimate;
  }

  SeriesSum out;
  out.value = alpha * sum;
  out.terms = stop - first;
  out.truncation_bound = bound;
  out.coefficient_error = alpha * coefficient_error;
  return out;
}

cplx kalpha_evaluation(const BoundaryFunction& f, double alpha, double lambda, double gamma) {
  cplx sum{0.0, 0.0};
  for (const cplx& w : roots_k_alpha(alpha).roots) {
    const cplx z = lambda * w;
    sum += (gamma == 0.0 ? cplx(1.0, 0.0) : principal_pow(z, -gamma)) * f(z);
  }
  return sum;
}

bool uses_nonneg(TaylorIdentity w) {
  return w == TaylorIdentity::t1 || w == TaylorIdentity::t3 || w == TaylorIdentity::t1A ||
         w == TaylorIdentity::t3A;
}

bool uses_neg(TaylorIdentity w) {
  return w == TaylorIdentity::t2 || w == TaylorIdentity::t3 || w == TaylorIdentity::t2A ||
         w == TaylorIdentity::t3A;
}

bool is_generalised(TaylorIdentity w) {
  return w == TaylorIdentity::t1A || w == TaylorIdentity::t2A || w == TaylorIdentity::t3A;
}

}  // namespace

void NeoParams::validate() const {
  require(alpha > 0.0 && std::isfinite(alpha), "alpha must be positive");
  require(n >= 1, "n must be a positive integer");
  require_lambda(lambda);
  require(gamma < alpha, "gamma must be below alpha");
}

IdentityReport make_report(cplx lhs, cplx rhs, double tol) {
  IdentityReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  r.rel_err = r.abs_err / std::max(1.0, std::abs(rhs));
  r.tol = tol;
  r.passed = r.rel_err <= tol;
  return r;
}

double neo_lhs(const NeoParams& p, Summation mode) {
  p.validate();
  const double top = p.alpha * p.n;
  CompensatedSum compensated;
  double plain = 0.0;
  for (int j = 0; j <= p.n; ++j) {
    const double xi = p.alpha * j;
    const double term = gen_binom(top, xi) * std::pow(p.lambda, xi);
    if (mode == Summation::compensated) {
      compensated.add(term);
    } else {
      plain += term;
    }
  }
  return p.alpha * (mode == Summation::compensated ? compensated.value() : plain);
}

double residual_R(const NeoParams& p, double tol) {
  p.validate();
  require(tol > 0.0, "tol must be positive");
  const double s = sin_pi(p.alpha);
  if (s == 0.0) return 0.0;

  const double a = p.alpha;
  const double lambda = p.lambda;
  const double prefactor = a * std::pow(lambda, a) * s / kPi;
  const double power = a * p.n;
  const double tail_weight = std::pow(lambda, power);
  RadialIntegrand g{a,
                    [=](double t) {
                      return std::pow(1.0 - t, power) *
                             (kernel_lambda(t, lambda, a) + tail_weight * kernel_one(t, lambda, a));
                    },
                    "(1-t)^(an) [K_lambda + lambda^(an) K_1]"};
  return prefactor * integrate_radial(g, tol / std::abs(prefactor)).value;
}

IdentityReport verify_neo3(const NeoParams& p, double tol) {
  p.validate();
  require(p.alpha < 2.0, "verify_neo3 needs 0 < alpha < 2");
  require(tol > 0.0, "tol must be positive");
  const double lhs = neo_lhs(p);
  const double full = std::pow(1.0 + p.lambda, p.alpha * p.n);
  const double r = residual_R(p, std::max(1e-15, 0.01 * tol));
  IdentityReport report = make_report(lhs, full - r, tol);
  report.pieces["residual_R"] = r;
  report.pieces["binomial_power"] = full;
  return report;
}

cplx kalpha_binomial_sum(double alpha, int n, double lambda) {
  require(n >= 1, "n must be a positive integer");
  require_lambda(lambda);
  cplx sum{0.0, 0.0};
  for (const cplx& w : roots_k_alpha(alpha).roots) {
    sum += principal_pow(1.0 + lambda * w, alpha * n);
  }
  return sum;
}

IdentityReport verify_neo3A(const NeoParams& p, double tol) {
  p.validate();
  require(tol > 0.0, "tol must be positive");
  const double lhs = neo_lhs(p);
  const cplx ksum = kalpha_binomial_sum(p.alpha, p.n, p.lambda);
  if (std::abs(ksum.imag()) > tol * std::max(1.0, std::abs(ksum.real()))) {
    throw ConsistencyError("K_alpha sum is not real: imaginary part " +
                           std::to_string(ksum.imag()));
  }
  const double r = residual_R(p, std::max(1e-15, 0.01 * tol));
  IdentityReport report = make_report(lhs, ksum.real() - r, tol);
  report.pieces["kalpha_sum"] = ksum.real();
  report.pieces["kalpha_imag"] = ksum.imag();
  report.pieces["kalpha_size"] = static_cast<double>(roots_k_alpha(p.alpha).size());
  report.pieces["residual_R"] = r;
  return report;
}

SignClass sign_classify(double alpha) {
  require(alpha > 0.0 && std::isfinite(alpha), "alpha must be positive");
  if (is_near_integer(alpha)) return SignClass::zero;
  const auto m = static_cast<long long>(std::floor(alpha));
  return m % 2 == 0 ? SignClass::negative : SignClass::positive;
}

InequalityCheck check_inequality(double alpha, int n, double x, double y) {
  require(alpha > 0.0 && alpha < 2.0, "check_inequality needs alpha in (0, 2)");
  require(n >= 1, "n must be a positive integer");
  require(x >= 0.0 && y >= 0.0 && std::isfinite(x) && std::isfinite(y),
          "x and y must be finite and non-negative");
  const double top = alpha * n;
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) {
    sum += gen_binom(top, alpha * j) * std::pow(x, alpha * j) * std::pow(y, alpha * (n - j));
  }
  InequalityCheck out;
  out.lhs = alpha * sum;
  out.rhs = std::pow(x + y, top);
  out.margin = out.rhs - out.lhs;
  const double scale = std::max(std::abs(out.lhs), std::abs(out.rhs));
  if (std::abs(out.margin) <= kEqualityRelTol * scale) {
    out.ordering = Ordering::equal;
  } else {
    out.ordering = out.margin > 0.0 ? Ordering::strict_less : Ordering::strict_greater;
  }
  return out;
}

bool lyons_inequality_holds(double alpha, int n, double x, double y) {
  const InequalityCheck c = check_inequality(alpha, n, x, y);
  return alpha * c.lhs <= c.rhs * (1.0 + kEqualityRelTol);
}

SeriesSum taylor_sum_nonneg(const BoundaryFunction& f, double alpha, double lambda,
                            double gamma, double tol) {
  return taylor_series(f, alpha, lambda, gamma, tol, Side::nonneg);
}

SeriesSum taylor_sum_neg(const BoundaryFunction& f, double alpha, double lambda, double gamma,
                         double tol) {
  return taylor_series(f, alpha, lambda, gamma, tol, Side::neg);
}

double kernel_merge_discrepancy(double t, double lambda, double alpha) {
  const double kl = kernel_lambda(t, lambda, alpha);
  const double ko = kernel_one(t, lambda, alpha);
  const double l2 = std::pow(lambda, 2.0 * alpha);
  const double t2 = std::pow(t, 2.0 * alpha);
  const double separate = -kl + ko;
  const double merged = -(1.0 - l2) * (1.0 - t2) * kl * ko;
  return std::abs(separate - merged) / std::max({1.0, kl, ko});
}

double kernel_merge_discrepancy_shifted(double t, double lambda, double alpha, double gamma) {
  const double kl = kernel_lambda(t, lambda, alpha);
  const double ko = kernel_one(t, lambda, alpha);
  const double la = std::pow(lambda, alpha);
  const double ta = std::pow(t, alpha);
  const double lta = std::pow(lambda * t, alpha);
  const double sg = sin_pi(gamma);
  const double sag = sin_pi(alpha - gamma);
  const double first = (ta * sg + la * sag) * kl;
  const double second = la * (sag + lta * sg) * ko;
  const double merged = (1.0 - la * la) *
                        (la * (1.0 - ta * ta) * sag +
                         ta * (1.0 - 2.0 * lta * cos_pi(alpha) + la * la) * sg) *
                        kl * ko;
  return std::abs((first - second) - merged) /
         std::max({1.0, std::abs(first), std::abs(second)});
}

IdentityReport verify_taylor(TaylorIdentity which, const BoundaryFunction& f, double alpha,
                             double lambda, double gamma, double tol) {
  require(tol > 0.0, "tol must be positive");
  require(alpha > 0.0 && std::isfinite(alpha), "alpha must be positive");
  require_lambda(lambda);
  const bool generalised = is_generalised(which);
  const bool even = half_is_natural(alpha);
  bool experimental = false;
  if (!generalised) {
    require(alpha < 2.0, "t1..t3 need 0 < alpha < 2");
    require(gamma == 0.0, "t1..t3 have no gamma offset");
  } else {
    require(gamma < alpha, "gamma must be below alpha");
    if (even && gamma != 0.0) {
      require(which == TaylorIdentity::t2A, "alpha/2 in N with gamma != 0 is only defined for t2A");
      require(lambda < 1.0, "the alpha/2 in N, gamma != 0 case of t2A needs lambda < 1");
      experimental = true;
    }
  }
  const bool degenerate = generalised && even && gamma == 0.0;

  const double budget = kBudgetShare * tol;
  const bool both = uses_nonneg(which) && uses_neg(which);
  const double series_tol = both ? 0.25 * budget : 0.5 * budget;

  cplx lhs{0.0, 0.0};
  double truncation = 0.0;
  double coefficient_error = 0.0;
  double terms = 0.0;
  if (uses_nonneg(which)) {
    const SeriesSum s = taylor_sum_nonneg(f, alpha, lambda, gamma, series_tol);
    lhs += s.value;
    truncation += s.truncation_bound;
    coefficient_error += s.coefficient_error;
    terms += static_cast<double>(s.terms);
  }
  if (uses_neg(which)) {
    const SeriesSum s = taylor_sum_neg(f, alpha, lambda, gamma, series_tol);
    lhs += s.value;
    truncation += s.truncation_bound;
    coefficient_error += s.coefficient_error;
    terms += static_cast<double>(s.terms);
  }

  cplx evaluation{0.0, 0.0};
  if (which == TaylorIdentity::t1 || which == TaylorIdentity::t3) {
    evaluation = f(cplx(lambda, 0.0));
  } else if (which == TaylorIdentity::t1A || which == TaylorIdentity::t3A) {
    evaluation = kalpha_evaluation(f, alpha, lambda, gamma);
  }

  // Residual prefactor and weight multiplying t^(alpha - gamma - 1) f(-t).
  const double la = std::pow(lambda, alpha);
  const double sa = sin_pi(alpha);
  const double ca = cos_pi(alpha);
  const double sg = sin_pi(gamma);
  const double sag = sin_pi(alpha - gamma);
  double prefactor = 0.0;
  std::function<double(double)> weight;
  switch (which) {
    case TaylorIdentity::t1:
      prefactor = -alpha * la * sa / kPi;
      weight = [=](double t) { return kernel_lambda(t, lambda, alpha); };
      break;
    case TaylorIdentity::t2:
      prefactor = alpha * la * sa / kPi;
      weight = [=](double t) { return kernel_one(t, lambda, alpha); };
      break;
    case TaylorIdentity::t3:
      prefactor = -alpha * la * (1.0 - la * la) * sa / kPi;
      weight = [=](double t) {
        const double t2 = std::pow(t, 2.0 * alpha);
        return (1.0 - t2) * kernel_lambda(t, lambda, alpha) * kernel_one(t, lambda, alpha);
      };
      break;
    case TaylorIdentity::t1A:
      prefactor = -alpha / kPi;
      weight = [=](double t) {
        return (std::pow(t, alpha) * sg + la * sag) * kernel_lambda(t, lambda, alpha);
      };
      break;
    case TaylorIdentity::t2A:
      prefactor = alpha * la / kPi;
      weight = [=](double t) {
        return (sag + std::pow(lambda * t, alpha) * sg) * kernel_one(t, lambda, alpha);
      };
      break;
    case TaylorIdentity::t3A:
      prefactor = -alpha * (1.0 - la * la) / kPi;
      weight = [=](double t) {
        const double ta = std::pow(t, alpha);
        const double lta = std::pow(lambda * t, alpha);
        return (la * (1.0 - ta * ta) * sag + ta * (1.0 - 2.0 * lta * ca + la * la) * sg) *
               kernel_lambda(t, lambda, alpha) * kernel_one(t, lambda, alpha);
      };
      break;
  }

  cplx residual{0.0, 0.0};
  double quad_error = 0.0;
  if (!degenerate && prefactor != 0.0) {
    const double exponent = alpha - (generalised ? gamma : 0.0);
    const double integral_tol = 0.5 * budget / std::abs(prefactor);
    residual = prefactor * radial_complex(f, exponent, weight, integral_tol, quad_error);
    quad_error *= std::abs(prefactor);
  }

  IdentityReport report = make_report(lhs, evaluation + residual, tol);
  report.pieces["kalpha_sum"] = evaluation.real();
  report.pieces["residual_integral"] = residual.real();
  report.pieces["truncation_bound"] = truncation;
  report.pieces["coefficient_error"] = coefficient_error;
  report.pieces["quad_error"] = quad_error;
  report.pieces["terms"] = terms;
  if (experimental) report.pieces["experimental"] = 1.0;

  if ((which == TaylorIdentity::t3 || which == TaylorIdentity::t3A) && !degenerate) {
    std::mt19937_64 rng(0x6b65726eULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 32; ++i) {
      const double t = 1.0 - unit(rng);
      const double l = 1.0 - unit(rng);
      worst = std::max(worst, which == TaylorIdentity::t3
                                  ? kernel_merge_discrepancy(t, l, alpha)
                                  : kernel_merge_discrepancy_shifted(t, l, alpha, gamma));
    }
    report.pieces["kernel_merge_max_err"] = worst;
    if (worst > kKernelMergeTol) report.passed = false;
  }
  return report;
}

RaySum binomial_ray_sum(double exponent, double alpha, double offset, std::int64_t first,
                        double tol) {
  require(exponent > 0.0, "binomial_ray_sum: T must be positive");
  require(alpha > 0.0 && std::isfinite(alpha), "alpha must be positive");
  require(tol > 0.0, "tol must be positive");
  const auto eta = [&](std::int64_t k) { return alpha * static_cast<double>(k) + offset; };

  RaySum out;
  double direct = 0.0;
  std::int64_t next = first;
  const auto extend_to = [&](std::int64_t stop) {
    for (; next < stop; ++next) direct += gen_binom(exponent, -eta(next));
  };

  // 1/Gamma(1 - eta) vanishes at every integer eta >= 1.
  if (is_near_integer(alpha) && is_near_integer(offset)) {
    while (eta(next) < 0.5) extend_to(next + 1);
    out.value = direct;
    out.direct_terms = next - first;
    return out;
  }

  const cplx z{cos_pi(alpha), sin_pi(alpha)};
  const cplx one_minus_z = 1.0 - z;
  if (std::abs(one_minus_z) < 1e-3) {
    throw TruncationError("binomial_ray_sum: alpha too close to an even integer to accelerate");
  }
  const cplx q = z / one_minus_z;
  const double scale = log_gamma(exponent + 1.0).value() / kPi;

  constexpr int kMaxOrder = 24;
  std::int64_t m = std::max<std::int64_t>(
      first, static_cast<std::int64_t>(std::ceil((exponent + 8.0 - offset) / alpha)));

  while (true) {
    if (m > kMaxSeriesTerms) {
      throw TruncationError("binomial_ray_sum: tail bound not met below 1e6 terms");
    }
    extend_to(m);

    // forward[i] = D^i A_m, built by repeated in-place differencing.
    std::array<double, kMaxOrder + 1> values{};
    for (int i = 0; i <= kMaxOrder; ++i) {
      values[i] = std::exp(log_gamma_ratio(eta(m + i), exponent + 1.0));
    }
    const double lead = values[0];
    const double value_noise =
        4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(std::log(lead))) * lead;
    std::array<double, kMaxOrder> forward{};
    for (int i = 0; i < kMaxOrder; ++i) {
      forward[i] = values[0];
      for (int j = 0; j < kMaxOrder - i; ++j) values[j] = values[j + 1] - values[j];
    }

    cplx acc{0.0, 0.0};
    cplx q_pow{1.0, 0.0};
    double noise = 0.0;
    double best_bound = std::numeric_limits<double>::infinity();
    cplx best_acc{0.0, 0.0};
    for (int order = 0; order < kMaxOrder; ++order) {
      acc += q_pow * forward[order];
      noise += std::abs(q_pow) * std::ldexp(value_noise, order) / std::abs(one_minus_z);
      q_pow *= q;
      const double bound = std::abs(q_pow) * std::abs(forward[order]) + noise;
      if (bound < best_bound) {
        best_bound = bound;
        best_acc = acc;
      }
    }

    const double error = scale * best_bound;
    if (error <= 0.5 * tol) {
      const double lead_eta = eta(m);
      const cplx phase{cos_pi(lead_eta), sin_pi(lead_eta)};
      out.value = direct + scale * (phase * best_acc / one_minus_z).imag();
      out.tail_bound = error;
      out.direct_terms = m - first;
      return out;
    }
    m *= 2;
  }
}

namespace {

RaySum osler_side(double exponent, double alpha, bool nonneg, double tol) {
  return nonneg ? binomial_ray_sum(exponent, alpha, -exponent, 0, tol)
                : binomial_ray_sum(exponent, alpha, 0.0, 1, tol);
}

}  // namespace

IdentityReport verify_osler(double alpha, int n, double tol) {
  require(alpha > 0.0 && std::isfinite(alpha), "alpha must be positive");
  require(n >= 1, "n must be a positive integer");
  require(tol > 0.0, "tol must be positive");
  const double exponent = alpha * n;
  cplx rhs;
  if (alpha < 2.0) {
    rhs = std::pow(2.0, exponent);
  } else {
    rhs = kalpha_binomial_sum(alpha, n, 1.0);
  }
  const double side_tol = 0.5 * kBudgetShare * tol * std::max(1.0, std::abs(rhs)) / alpha;
  const RaySum pos = osler_side(exponent, alpha, true, side_tol);
  const RaySum neg = osler_side(exponent, alpha, false, side_tol);
  IdentityReport report = make_report(alpha * (pos.value + neg.value), rhs, tol);
  report.pieces["truncation_bound"] = alpha * (pos.tail_bound + neg.tail_bound);
  report.pieces["terms"] = static_cast<double>(pos.direct_terms + neg.direct_terms);
  return report;
}

std::vector<double> r_monotonicity_scan(double alpha, double lambda, int n_max) {
  require(alpha > 0.0 && alpha < 2.0, "r_monotonicity_scan needs alpha in (0, 2)");
  require_lambda(lambda);
  require(n_max >= 1, "n_max must be positive");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) out.push_back(residual_R({alpha, n, lambda, 0.0}));
  return out;
}

const char* to_string(TaylorIdentity which) {
  switch (which) {
    case TaylorIdentity::t1: return "t1";
    case TaylorIdentity::t2: return "t2";
    case TaylorIdentity::t3: return "t3";
    case TaylorIdentity::t1A: return "t1A";
    case TaylorIdentity::t2A: return "t2A";
    case TaylorIdentity::t3A: return "t3A";
  }
  return "?";
}

const char* to_string(SignClass s) {
  switch (s) {
    case SignClass::negative: return "negative";
    case SignClass::zero: return "zero";
    case SignClass::positive: return "positive";
  }
  return "?";
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::strict_less: return "strict_less";
    case Ordering::equal: return "equal";
    case Ordering::strict_greater: return "strict_greater";
  }
  return "?";
}

}  // namespace neoclassical
