#include "neoclassical/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace neoclassical {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Both branches accumulate in long double so log|Gamma| (up to ~700 near
// |x| = 170) is rounded to double only once.
long double lanczos_log_gamma(long double x) {
  // Gamma(x) = sqrt(2 pi) t^(x - 1/2) e^(-t) A(x - 1),  t = x - 1/2 + g
  const long double z = x - 1.0L;
  long double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    series += static_cast<long double>(kLanczos[i]) / (z + static_cast<long double>(i));
  }
  const long double t = z + static_cast<long double>(kLanczosG) + 0.5L;
  return 0.5L * std::log(2.0L * std::numbers::pi_v<long double>) + (z + 0.5L) * std::log(t) -
         t + std::log(series);
}

// The g = 7 Lanczos fit drifts to ~1e-13 in log|Gamma| by x = 170; the
// asymptotic series is below 1e-18 for x >= 10.
constexpr double kStirlingFrom = 10.0;

// The Bernoulli tail of Stirling's series, sum B_2k / (2k (2k-1) x^(2k-1)).
long double stirling_series(long double x) {
  static constexpr std::array<long double, 8> kBernoulliTerms = {
      1.0L / 12.0L,      -1.0L / 360.0L,         1.0L / 1260.0L,
      -1.0L / 1680.0L,   1.0L / 1188.0L,         -691.0L / 360360.0L,
      1.0L / 156.0L,     -3617.0L / 122400.0L};
  const long double inv = 1.0L / x;
  const long double inv2 = inv * inv;
  long double correction = 0.0L;
  for (auto it = kBernoulliTerms.rbegin(); it != kBernoulliTerms.rend(); ++it) {
    correction = correction * inv2 + *it;
  }
  return correction * inv;
}

long double stirling_log_gamma(long double x) {
  return (x - 0.5L) * std::log(x) - x + 0.5L * std::log(2.0L * std::numbers::pi_v<long double>) +
         stirling_series(x);
}

long double long_sin_pi(double x) {
  long double r = std::remainder(x, 2.0);
  if (r > 0.5L) {
    r = 1.0L - r;
  } else if (r < -0.5L) {
    r = -1.0L - r;
  }
  return std::sin(std::numbers::pi_v<long double> * r);
}

// x > 0; below 0.5 the Lanczos form is still valid (its poles are at x <= 0).
long double positive_log_gamma(long double x) {
  return x >= kStirlingFrom ? stirling_log_gamma(x) : lanczos_log_gamma(x);
}

}  // namespace

bool is_near_integer(double x) {
  if (!std::isfinite(x)) return false;
  return std::abs(x - std::round(x)) < kIntegerSnap * std::max(1.0, std::abs(x));
}

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::remainder(x, 2.0);  // exact, r in [-1, 1]
  if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kPi * r);
}

double cos_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double a = std::abs(std::remainder(x, 2.0));
  double sign = 1.0;
  if (a > 0.5) {
    a = 1.0 - a;
    sign = -1.0;
  }
  if (a == 0.5) return 0.0;
  if (a < 0.25) return sign * std::cos(kPi * a);
  return sign * std::sin(kPi * (0.5 - a));
}

double LogGammaValue::value() const {
  if (is_pole) return std::numeric_limits<double>::infinity();
  return static_cast<double>(sign) * std::exp(log_abs);
}

LogGammaValue log_gamma(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("log_gamma: non-finite argument");
  }
  if (is_near_integer(x) && std::round(x) <= 0.0) {
    LogGammaValue pole;
    pole.log_abs = std::numeric_limits<double>::infinity();
    pole.is_pole = true;
    return pole;
  }
  LogGammaValue out;
  if (x == std::round(x) && x <= 23.0) {
    // (x-1)! is exact in double up to 22!.
    double factorial = 1.0;
    for (double i = 2.0; i < x; i += 1.0) factorial *= i;
    out.log_abs = std::log(factorial);
    return out;
  }
  if (x >= 0.5) {
    out.log_abs = static_cast<double>(positive_log_gamma(x));
    return out;
  }

  // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)), Gamma(1 - x) > 0 here.
  const double s = sin_pi(x);
  const long double mirror = positive_log_gamma(1.0L - x);
  out.log_abs = static_cast<double>(std::log(std::numbers::pi_v<long double>) -
                                    std::log(std::abs(long_sin_pi(x))) - mirror);
  out.sign = s > 0.0 ? 1 : -1;
  return out;
}

double log_gamma_ratio(double x, double s) {
  if (!(x > 0.0) || !(x + s > 0.0)) {
    throw std::domain_error("log_gamma_ratio: arguments must be positive");
  }
  const long double lx = x;
  const long double ls = s;
  if (lx < kStirlingFrom || lx + ls < kStirlingFrom) {
    return static_cast<double>(positive_log_gamma(lx) - positive_log_gamma(lx + ls));
  }
  // Stirling difference written without the O(x log x) parts that cancel.
  const long double y = lx + ls;
  const long double main = -(lx - 0.5L) * std::log1p(ls / lx) - ls * std::log(y) + ls;
  return static_cast<double>(main + stirling_series(lx) - stirling_series(y));
}

double gen_binom(double w, double z) {
  if (!std::isfinite(w) || !std::isfinite(z)) {
    throw std::domain_error("gen_binom: non-finite argument");
  }
  const LogGammaValue num = log_gamma(w + 1.0);
  if (num.is_pole) {
    throw std::domain_error("gen_binom: w = " + std::to_string(w) +
                            " is a negative integer");
  }

  if (is_near_integer(w) && is_near_integer(z)) {
    const double top = std::round(w);
    const double k = std::round(z);
    if (k < 0.0 || k > top) return 0.0;
    if (top <= 50.0) {
      // Every partial product is an integer below 2^53.
      const double m = std::min(k, top - k);
      double c = 1.0;
      for (double i = 1.0; i <= m; i += 1.0) c = c * (top - m + i) / i;
      return c;
    }
  }

  // Non-negative integer z (or w - z): a short product beats three Gammas.
  for (const double lower : {z, w - z}) {
    if (!is_near_integer(lower)) continue;
    const double k = std::round(lower);
    if (k < 0.0) return 0.0;
    if (k > 50.0) continue;
    double c = 1.0;
    for (double i = 1.0; i <= k; i += 1.0) c = c * (w - k + i) / i;
    return c;
  }

  const LogGammaValue den1 = log_gamma(z + 1.0);
  const LogGammaValue den2 = log_gamma(w - z + 1.0);
  if (den1.is_pole || den2.is_pole) return 0.0;
  const int sign = num.sign * den1.sign * den2.sign;
  return static_cast<double>(sign) *
         std::exp(num.log_abs - den1.log_abs - den2.log_abs);
}

double principal_arg(cplx z) {
  const double theta = std::atan2(z.imag(), z.real());
  return theta == -kPi ? kPi : theta;
}

cplx principal_pow(cplx z, double beta) {
  if (z == cplx(0.0, 0.0)) {
    if (beta > 0.0) return {0.0, 0.0};
    throw std::domain_error("principal_pow: zero base with non-positive exponent");
  }
  const double mag = std::pow(std::abs(z), beta);
  const double theta = principal_arg(z);
  if (theta == 0.0) return {mag, 0.0};
  if (theta == kPi) return {mag * cos_pi(beta), mag * sin_pi(beta)};
  const double phase = theta * beta;
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

bool RootSetKAlpha::contains_minus_one() const {
  for (double a : angles) {
    if (a == kPi) return true;
  }
  return false;
}

bool half_is_natural(double alpha) {
  const double half = 0.5 * alpha;
  return is_near_integer(half) && std::round(half) >= 1.0;
}

RootSetKAlpha roots_k_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::domain_error("roots_k_alpha: alpha must be positive and finite");
  }
  const double half = 0.5 * alpha;
  const bool boundary = is_near_integer(half);
  const long kmax = static_cast<long>(boundary ? std::round(half) : std::floor(half));
  const long kmin = boundary ? -kmax + 1 : -kmax;

  RootSetKAlpha set;
  set.alpha = alpha;
  for (long k = kmin; k <= kmax; ++k) {
    double theta = 0.0;
    cplx root{1.0, 0.0};
    if (boundary && k == kmax) {
      theta = kPi;
      root = {-1.0, 0.0};
    } else if (k != 0) {
      const double turns = 2.0 * static_cast<double>(k) / alpha;
      theta = kPi * turns;
      root = {cos_pi(turns), sin_pi(turns)};
    }
    // Adjacent angles are 2 pi / alpha apart; collisions only at the theta = pi seam.
    if (!set.angles.empty() && std::abs(theta - set.angles.back()) < 1e-12) continue;
    set.k.push_back(static_cast<int>(k));
    set.angles.push_back(theta);
    set.roots.push_back(root);
  }
  return set;
}

}  // namespace neoclassical
