#ifndef NEOCLASSICAL_SPECIAL_FUNCTIONS_HPP
#define NEOCLASSICAL_SPECIAL_FUNCTIONS_HPP

#include <complex>
#include <vector>

namespace neoclassical {

using cplx = std::complex<double>;

/// Relative distance below which a real argument is treated as an integer.
inline constexpr double kIntegerSnap = 1e-9;

/// True when |x - round(x)| < kIntegerSnap * max(1, |x|).
bool is_near_integer(double x);

/// sin(pi x) and cos(pi x) with exact argument reduction; both return an
/// exact zero at the integers / half-integers where the true value vanishes.
double sin_pi(double x);
double cos_pi(double x);

/// Gamma(x) in log-magnitude/sign form. Poles are reported in-band.
struct LogGammaValue {
  double log_abs = 0.0;
  int sign = 1;
  bool is_pole = false;

  /// sign * exp(log_abs); +inf at poles.
  double value() const;
};

/// Lanczos (g = 7, 9 terms) on [0.5, 10), Stirling series above, reflection
/// formula below 0.5.
LogGammaValue log_gamma(double x);

/// log Gamma(x) - log Gamma(x + s) for x > 0, x + s > 0, accurate for large x
/// where differencing two rounded log_gamma values would not be.
double log_gamma_ratio(double x, double s);

/// Gamma(w+1) / (Gamma(z+1) Gamma(w-z+1)), zero when a denominator Gamma sits
/// on a pole. Throws std::domain_error when w is a negative integer.
double gen_binom(double w, double z);

/// z^beta = r^beta exp(i theta beta), theta = arg z taken in (-pi, pi].
/// Negative reals with a signed-zero imaginary part get theta = pi.
/// Throws std::domain_error for z = 0 with beta <= 0.
cplx principal_pow(cplx z, double beta);

/// Principal argument in (-pi, pi].
double principal_arg(cplx z);

/// The root set K_alpha = { w : w^alpha = 1 } under the principal branch.
struct RootSetKAlpha {
  double alpha = 1.0;
  std::vector<int> k;       // ascending; root i is exp(2 pi i k[i] / alpha)
  std::vector<cplx> roots;
  std::vector<double> angles;

  std::size_t size() const { return roots.size(); }
  bool contains_minus_one() const;
};

/// Enumerates k in (-alpha/2, alpha/2]. Throws std::domain_error for alpha <= 0.
RootSetKAlpha roots_k_alpha(double alpha);

/// alpha/2 is a positive integer (within the integer snap).
bool half_is_natural(double alpha);

}  // namespace neoclassical

#endif  // NEOCLASSICAL_SPECIAL_FUNCTIONS_HPP
