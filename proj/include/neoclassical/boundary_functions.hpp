#ifndef NEOCLASSICAL_BOUNDARY_FUNCTIONS_HPP
#define NEOCLASSICAL_BOUNDARY_FUNCTIONS_HPP

#include <functional>
#include <optional>
#include <string>

#include "neoclassical/special_functions.hpp"

namespace neoclassical {

enum class Smoothness { analytic_on_closure, c2_vanishing_at_minus_one, continuous_only };

/// A function continuous on the closed unit disk and holomorphic inside.
///
/// Two evaluators are kept: `disk` for points of the closed disk (the
/// identities need f(lambda w) and f(-t)), and `circle` for x in [-1/2, 1/2]
/// returning f(exp(2 pi i x)). Factories provide circle evaluators that stay
/// accurate near z = -1 where a generic composition would not.
class BoundaryFunction {
 public:
  using DiskFn = std::function<cplx(cplx)>;
  using CircleFn = std::function<cplx(double)>;

  /// Throws PreconditionError if circle(-1/2) and circle(1/2) differ by more
  /// than 1e-10. sup_bound is probed on 4096 points when not supplied.
  BoundaryFunction(std::string name, DiskFn disk, CircleFn circle, Smoothness smoothness,
                   std::optional<double> sup_bound = std::nullopt);

  /// f(z) = (1 + z)^T, T > 0, principal branch.
  static BoundaryFunction binomial(double exponent);
  /// f(z) = exp(z).
  static BoundaryFunction exponential();
  /// Wraps a disk evaluator; the circle evaluator composes it with exp(2 pi i x).
  static BoundaryFunction from_disk(std::string name, DiskFn disk, Smoothness smoothness,
                                    std::optional<double> sup_bound = std::nullopt);

  cplx operator()(cplx z) const { return disk_(z); }
  cplx on_circle(double x) const { return circle_(x); }

  const std::string& name() const { return name_; }
  Smoothness smoothness() const { return smoothness_; }
  double sup_bound() const { return sup_bound_; }
  /// Set only for (1 + z)^T; certifies the |xi|^(-T-1) coefficient decay.
  std::optional<double> binomial_exponent() const { return binomial_exponent_; }

 private:
  std::string name_;
  DiskFn disk_;
  CircleFn circle_;
  Smoothness smoothness_;
  double sup_bound_ = 0.0;
  std::optional<double> binomial_exponent_;
};

/// f^#(xi) with the error estimate of the final grid refinement.
struct FracCoefficient {
  double xi = 0.0;
  cplx value;
  double quad_error_estimate = 0.0;
};

/// Computes f^#(xi) = int_{-1/2}^{1/2} f(e^{2 pi i x}) e^{-2 pi i x xi} dx.
///
/// The trapezoidal rule is applied on a uniform grid in u after the
/// double-exponential map x = tanh((pi/2) sinh u) / 2, halving the step until
/// two successive sums differ by less than tol/2 (at most 2^20 nodes). The
/// map absorbs both the (1/2 - |x|)^T behaviour of (1 + z)^T at z = -1 and
/// the endpoint mismatch of e^{-2 pi i x xi} for non-integer xi.
///
/// Throws ConvergenceError (with the best value) when the node cap is hit.
FracCoefficient fsharp(const BoundaryFunction& f, double xi, double tol);

/// Closed form of f^# for f = (1 + z)^T: gen_binom(T, xi).
double fsharp_binomial(double exponent, double xi);

}  // namespace neoclassical

#endif  // NEOCLASSICAL_BOUNDARY_FUNCTIONS_HPP
