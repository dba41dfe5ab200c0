#ifndef NEOCLASSICAL_QUADRATURE_HPP
#define NEOCLASSICAL_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <string>

namespace neoclassical {

inline constexpr std::size_t kMaxIntervals = 100000;

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t intervals = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod on [a, b], bisecting the interval
/// with the largest error until the summed estimate is below tol (floored at
/// roundoff level relative to the integral of |f|).
///
/// Throws ConvergenceError at the interval cap and std::domain_error when f
/// returns a non-finite value.
QuadratureResult gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                               double tol, std::size_t max_intervals = kMaxIntervals);

/// The integral of t^(alpha - 1) h(t) over (0, 1], h bounded and continuous.
struct RadialIntegrand {
  double alpha = 1.0;
  std::function<double(double)> h;
  std::string description;
};

/// Substitutes t = s^(1/alpha), which removes the endpoint singularity:
///   int_0^1 t^(alpha-1) h(t) dt = (1/alpha) int_0^1 h(s^(1/alpha)) ds.
QuadratureResult integrate_radial(const RadialIntegrand& g, double tol);

/// 1 / |t^alpha - lambda^alpha e^(-i alpha pi)|^2.
/// Throws SingularKernelError when the denominator drops below 1e-300.
double kernel_lambda(double t, double lambda, double alpha);

/// 1 / |e^(-i alpha pi) - (lambda t)^alpha|^2.
double kernel_one(double t, double lambda, double alpha);

}  // namespace neoclassical

#endif  // NEOCLASSICAL_QUADRATURE_HPP
