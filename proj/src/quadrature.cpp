#include "neoclassical/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "neoclassical/errors.hpp"
#include "neoclassical/special_functions.hpp"

namespace neoclassical {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod abscissae (descending, last is the centre) and weights; the Gauss
// 7-point rule uses the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  double resabs = 0.0;

  bool operator<(const Segment& other) const { return error < other.error; }
};

double checked(const std::function<double(double)>& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw std::domain_error("quadrature: integrand is not finite at x = " + std::to_string(x));
  }
  return y;
}

// QUADPACK qk15 error heuristic.
Segment qk15(const std::function<double(double)>& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = checked(f, centre);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = checked(f, centre - dx);
    f2[j] = checked(f, centre + dx);
    const double pair = f1[j] + f2[j];
    resk += kWgk[j] * pair;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * pair;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }

  Segment s;
  s.a = a;
  s.b = b;
  s.value = resk * half;
  s.resabs = resabs * std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (s.resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * s.resabs, err);
  }
  s.error = err;
  return s;
}

}  // namespace

QuadratureResult gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                               double tol, std::size_t max_intervals) {
  if (!(tol > 0.0)) throw PreconditionError("gauss_kronrod: tol must be positive");
  if (a == b) return {};

  std::priority_queue<Segment> heap;
  Segment first = qk15(f, a, b);
  double value = first.value;
  double error = first.error;
  double resabs = first.resabs;
  heap.push(first);

  const double min_width = 8.0 * kEps * std::max({1.0, std::abs(a), std::abs(b)});
  while (error > std::max(tol, 100.0 * kEps * resabs)) {
    if (heap.size() >= max_intervals) {
      throw ConvergenceError("gauss_kronrod: interval cap reached", value, error);
    }
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (std::abs(worst.b - worst.a) < min_width) {
      throw ConvergenceError("gauss_kronrod: subdivision below roundoff", value, error);
    }
    heap.pop();
    const Segment left = qk15(f, worst.a, mid);
    const Segment right = qk15(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    resabs += left.resabs + right.resabs - worst.resabs;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to shed the drift of the running updates.
  QuadratureResult out;
  out.intervals = heap.size();
  while (!heap.empty()) {
    out.value += heap.top().value;
    out.error += heap.top().error;
    heap.pop();
  }
  return out;
}

QuadratureResult integrate_radial(const RadialIntegrand& g, double tol) {
  if (!(g.alpha > 0.0) || !std::isfinite(g.alpha)) {
    throw PreconditionError("integrate_radial: alpha must be positive");
  }
  if (!(tol > 0.0)) throw PreconditionError("integrate_radial: tol must be positive");
  const double inv_alpha = 1.0 / g.alpha;
  const auto transformed = [&](double s) {
    return g.h(g.alpha == 1.0 ? s : std::pow(s, inv_alpha));
  };
  QuadratureResult r = gauss_kronrod(transformed, 0.0, 1.0, tol * g.alpha);
  r.value *= inv_alpha;
  r.error *= inv_alpha;
  return r;
}

namespace {

void check_kernel_args(double t, double lambda, double alpha) {
  if (!(t > 0.0 && t <= 1.0) || !(lambda > 0.0 && lambda <= 1.0) || !(alpha > 0.0)) {
    throw PreconditionError("kernel: need t, lambda in (0, 1] and alpha > 0");
  }
}

double invert_denominator(double den) {
  if (den < 1e-300) {
    throw SingularKernelError("kernel denominator collapsed (alpha an even integer?)");
  }
  return 1.0 / den;
}

}  // namespace

double kernel_lambda(double t, double lambda, double alpha) {
  check_kernel_args(t, lambda, alpha);
  // t^(2a) - 2 (t lambda)^a cos(a pi) + lambda^(2a), with the square completed.
  const double ta = std::pow(t, alpha);
  const double la = std::pow(lambda, alpha);
  const double re = ta - la * cos_pi(alpha);
  const double im = la * sin_pi(alpha);
  return invert_denominator(re * re + im * im);
}

double kernel_one(double t, double lambda, double alpha) {
  check_kernel_args(t, lambda, alpha);
  const double u = std::pow(lambda * t, alpha);
  const double re = cos_pi(alpha) - u;
  const double im = sin_pi(alpha);
  return invert_denominator(re * re + im * im);
}

}  // namespace neoclassical
