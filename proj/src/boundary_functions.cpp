#include "neoclassical/boundary_functions.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "neoclassical/errors.hpp"

namespace neoclassical {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kProbePoints = 4096;

// Double-exponential grid: u in [-kEdge, kEdge], first step kEdge / kBaseHalfCount.
constexpr double kEdge = 3.75;
constexpr int kBaseHalfCount = 8;
constexpr int kMaxLevel = 16;  // 2 * 8 * 2^16 + 1 < 2^20 nodes

cplx unit_circle(double x) { return {cos_pi(2.0 * x), sin_pi(2.0 * x)}; }

}  // namespace

BoundaryFunction::BoundaryFunction(std::string name, DiskFn disk, CircleFn circle,
                                   Smoothness smoothness, std::optional<double> sup_bound)
    : name_(std::move(name)),
      disk_(std::move(disk)),
      circle_(std::move(circle)),
      smoothness_(smoothness) {
  if (!disk_ || !circle_) throw PreconditionError("BoundaryFunction: empty evaluator");
  if (std::abs(circle_(-0.5) - circle_(0.5)) > 1e-10) {
    throw PreconditionError("BoundaryFunction '" + name_ + "': f(e^{-i pi}) != f(e^{i pi})");
  }
  double probed = 0.0;
  for (int i = 0; i <= kProbePoints; ++i) {
    const double x = -0.5 + static_cast<double>(i) / kProbePoints;
    probed = std::max(probed, std::abs(circle_(x)));
  }
  sup_bound_ = sup_bound ? std::max(*sup_bound, probed) : probed;
}

BoundaryFunction BoundaryFunction::binomial(double exponent) {
  if (!(exponent > 0.0)) throw PreconditionError("binomial boundary function needs T > 0");
  const double t = exponent;
  auto disk = [t](cplx z) { return principal_pow(1.0 + z, t); };
  // 1 + e^{2 pi i x} = 2 cos(pi x) e^{i pi x}, with cos(pi x) >= 0 on [-1/2, 1/2].
  auto circle = [t](double x) {
    const double mag = std::pow(2.0 * cos_pi(x), t);
    const double phase = kPi * x * t;
    return cplx(mag * std::cos(phase), mag * std::sin(phase));
  };
  BoundaryFunction f("(1+z)^" + std::to_string(t), disk, circle,
                     is_near_integer(t) ? Smoothness::analytic_on_closure
                     : t >= 2.0         ? Smoothness::c2_vanishing_at_minus_one
                                        : Smoothness::continuous_only,
                     std::pow(2.0, t));
  f.binomial_exponent_ = t;
  return f;
}

BoundaryFunction BoundaryFunction::exponential() {
  auto disk = [](cplx z) { return std::exp(z); };
  auto circle = [](double x) { return std::exp(unit_circle(x)); };
  return BoundaryFunction("exp(z)", disk, circle, Smoothness::analytic_on_closure,
                          std::numbers::e);
}

BoundaryFunction BoundaryFunction::from_disk(std::string name, DiskFn disk,
                                             Smoothness smoothness,
                                             std::optional<double> sup_bound) {
  auto circle = [disk](double x) { return disk(unit_circle(x)); };
  return BoundaryFunction(std::move(name), disk, circle, smoothness, sup_bound);
}

FracCoefficient fsharp(const BoundaryFunction& f, double xi, double tol) {
  if (!(tol > 0.0)) throw PreconditionError("fsharp: tol must be positive");
  if (!std::isfinite(xi)) throw PreconditionError("fsharp: xi must be finite");

  const auto integrand = [&](double x) {
    const double turns = std::remainder(x * xi, 1.0);
    const double angle = -2.0 * kPi * turns;
    return f.on_circle(x) * cplx(std::cos(angle), std::sin(angle));
  };
  // Contribution of the symmetric pair of nodes at +u and -u (or the centre).
  const auto node_pair = [&](double u) -> cplx {
    const double v = 0.5 * kPi * std::sinh(u);
    const double c = std::cosh(v);
    const double weight = 0.25 * kPi * std::cosh(u) / (c * c);
    const double x = 0.5 * std::tanh(v);
    if (u == 0.0) return weight * integrand(0.0);
    return weight * (integrand(x) + integrand(-x));
  };

  // Resolve the oscillation of e^{-2 pi i x xi} before trusting agreement.
  const double resolved_step = 0.5 / (1.0 + std::abs(xi));

  double step = kEdge / kBaseHalfCount;
  cplx sum = node_pair(0.0);
  for (int k = 1; k <= kBaseHalfCount; ++k) sum += node_pair(k * step);
  cplx estimate = step * sum;

  for (int level = 1; level <= kMaxLevel; ++level) {
    step *= 0.5;
    const int count = kBaseHalfCount << level;
    for (int k = 1; k < count; k += 2) sum += node_pair(k * step);
    const cplx refined = step * sum;
    const double diff = std::abs(refined - estimate);
    estimate = refined;
    if (step <= resolved_step && diff < 0.5 * tol) {
      return {xi, estimate, diff};
    }
    if (level == kMaxLevel) {
      throw ConvergenceError("fsharp: node cap reached at xi = " + std::to_string(xi),
                             estimate.real(), diff);
    }
  }
  return {xi, estimate, 0.0};  // unreachable
}

double fsharp_binomial(double exponent, double xi) {
  if (!(exponent > 0.0)) throw PreconditionError("fsharp_binomial: T must be positive");
  return gen_binom(exponent, xi);
}

}  // namespace neoclassical
