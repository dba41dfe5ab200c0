#ifndef NEOCLASSICAL_IDENTITIES_HPP
#define NEOCLASSICAL_IDENTITIES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "neoclassical/boundary_functions.hpp"
#include "neoclassical/special_functions.hpp"

namespace neoclassical {

/// Parameters of the neo-classical sums: order alpha, length n, ratio lambda
/// and the offset gamma of the shifted series.
struct NeoParams {
  double alpha = 0.5;
  int n = 1;
  double lambda = 1.0;
  double gamma = 0.0;

  /// Throws PreconditionError unless alpha > 0, n >= 1, lambda in (0, 1] and
  /// gamma < alpha.
  void validate() const;
};

/// Both sides of one identity. rel_err = |lhs - rhs| / max(1, |rhs|).
struct IdentityReport {
  cplx lhs;
  cplx rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool passed = false;
  std::map<std::string, double> pieces;
};

IdentityReport make_report(cplx lhs, cplx rhs, double tol);

enum class Summation { plain, compensated };

/// alpha * sum_{j=0}^{n} binom(alpha n, alpha j) lambda^(alpha j), j ascending.
double neo_lhs(const NeoParams& p, Summation mode = Summation::plain);

inline constexpr double kResidualTol = 1e-13;

/// The error term R(alpha, n, lambda): (alpha lambda^alpha sin(alpha pi) / pi)
/// times int_0^1 t^(alpha-1) (1-t)^(alpha n) [K_lambda + lambda^(alpha n) K_1] dt.
/// Exactly zero for integer alpha, where sin(alpha pi) vanishes (this covers
/// alpha = 1 and alpha/2 in N). tol is absolute on R.
double residual_R(const NeoParams& p, double tol = kResidualTol);

/// neo_lhs against (1 + lambda)^(alpha n) - R, for 0 < alpha < 2.
IdentityReport verify_neo3(const NeoParams& p, double tol);

/// sum over K_alpha of (1 + lambda w)^(alpha n), principal powers.
cplx kalpha_binomial_sum(double alpha, int n, double lambda);

/// neo_lhs against Re(sum over K_alpha) - R for any alpha > 0. Throws
/// ConsistencyError when the K_alpha sum has an imaginary part above
/// tol * max(1, |Re|).
IdentityReport verify_neo3A(const NeoParams& p, double tol);

enum class SignClass { negative, zero, positive };

/// Sign of neo_lhs minus the K_alpha sum: negative on (2m, 2m+1), zero on
/// the integers, positive on (2m+1, 2m+2).
SignClass sign_classify(double alpha);

enum class Ordering { strict_less, equal, strict_greater };

struct InequalityCheck {
  Ordering ordering = Ordering::equal;
  double lhs = 0.0;     // alpha * sum binom(alpha n, alpha j) x^(alpha j) y^(alpha(n-j))
  double rhs = 0.0;     // (x + y)^(alpha n)
  double margin = 0.0;  // rhs - lhs
};

inline constexpr double kEqualityRelTol = 1e-12;

/// Orders the two sides of the neo-classical inequality for alpha in (0, 2).
/// "equal" means |margin| <= 1e-12 * max(|lhs|, |rhs|).
InequalityCheck check_inequality(double alpha, int n, double x, double y);

/// The weaker alpha^2 form, derived from check_inequality.
bool lyons_inequality_holds(double alpha, int n, double x, double y);

/// A truncated series with the bounds that justify the truncation.
struct SeriesSum {
  cplx value;
  std::int64_t terms = 0;
  double truncation_bound = 0.0;   // bound on the discarded tail
  double coefficient_error = 0.0;  // weighted quadrature error of the f^# values
};

inline constexpr std::int64_t kMaxSeriesTerms = 1000000;

/// alpha * sum_{j>=0} f^#(alpha j + gamma) lambda^(alpha j).
///
/// For lambda < 1 the coefficients come from fsharp and the sum stops at the
/// first J with alpha M lambda^(alpha J) / (1 - lambda^alpha) < tol/2, M the
/// sup bound of f. lambda = 1 is accepted only for (1 + z)^T, whose
/// coefficients gen_binom(T, xi) decay like |xi|^(-T-1); there the series is
/// summed in closed form with an accelerated tail.
SeriesSum taylor_sum_nonneg(const BoundaryFunction& f, double alpha, double lambda,
                            double gamma, double tol);

/// alpha * sum_{j<=-1} f^#(alpha j + gamma) lambda^(-alpha j). Same truncation.
SeriesSum taylor_sum_neg(const BoundaryFunction& f, double alpha, double lambda, double gamma,
                         double tol);

enum class TaylorIdentity { t1, t2, t3, t1A, t2A, t3A };

/// Checks one of the fractional Taylor identities: the series side against
/// the f-evaluation term and the residual integral.
///
/// t1..t3 need 0 < alpha < 2 and gamma = 0. t1A..t3A need gamma < alpha and
/// alpha/2 not in N, except alpha/2 in N with gamma = 0, where the residual
/// terms are zero. t2A with alpha/2 in N and gamma != 0 is accepted for
/// lambda < 1 and marked with the piece "experimental" = 1.
///
/// t3 and t3A also check the kernel-merging identity at 32 pseudo-random
/// (t, lambda) points; a discrepancy above 1e-12 fails the report.
IdentityReport verify_taylor(TaylorIdentity which, const BoundaryFunction& f, double alpha,
                             double lambda, double gamma, double tol);

/// |(-K_lambda + K_1) - (-(1 - lambda^2a)(1 - t^2a) K_lambda K_1)|, scaled by
/// max(1, K_lambda, K_1).
double kernel_merge_discrepancy(double t, double lambda, double alpha);

/// Same for the gamma-shifted kernels of the generalised identities.
double kernel_merge_discrepancy_shifted(double t, double lambda, double alpha, double gamma);

inline constexpr double kKernelMergeTol = 1e-12;

/// sum_{k >= first} binom(T, -(alpha k + offset)), summed directly up to an
/// index m and accelerated beyond it.
///
/// For large eta the terms are (Gamma(T+1)/pi) sin(pi eta) A(eta) with
/// A(eta) = Gamma(eta)/Gamma(eta+T+1) completely monotone, so the tail is the
/// imaginary part of sum z^k A_k with z = e^{i pi alpha}. Repeated summation
/// by parts (the Euler transform) gives
///   sum_{k>=m} z^k A_k = z^m/(1-z) sum_{i<K} q^i D^i A_m + remainder,
///   q = z/(1-z), |remainder| <= |q|^K |D^(K-1) A_m|.
/// Integer alpha with integer offset has a finite support and is summed exactly.
struct RaySum {
  double value = 0.0;
  double tail_bound = 0.0;
  std::int64_t direct_terms = 0;
};

RaySum binomial_ray_sum(double exponent, double alpha, double offset, std::int64_t first,
                        double tol);

/// alpha * sum_{j in Z} binom(alpha n, alpha j) against 2^(alpha n) (alpha < 2)
/// or the K_alpha sum of (1 + w)^(alpha n).
IdentityReport verify_osler(double alpha, int n, double tol);

/// [R(alpha, 1, lambda), ..., R(alpha, n_max, lambda)].
std::vector<double> r_monotonicity_scan(double alpha, double lambda, int n_max);

const char* to_string(TaylorIdentity which);
const char* to_string(SignClass s);
const char* to_string(Ordering o);

}  // namespace neoclassical

#endif  // NEOCLASSICAL_IDENTITIES_HPP
