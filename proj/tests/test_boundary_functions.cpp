#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "neoclassical/boundary_functions.hpp"
#include "neoclassical/errors.hpp"

using namespace neoclassical;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("fsharp examples") {
  const BoundaryFunction cube = BoundaryFunction::binomial(3.0);
  CHECK(std::abs(fsharp(cube, 2.0, 1e-12).value - 3.0) <= 1e-12);
  CHECK(std::abs(fsharp(cube, -2.0, 1e-12).value) <= 1e-12);
  const BoundaryFunction linear = BoundaryFunction::binomial(1.0);
  CHECK(std::abs(fsharp(linear, 0.5, 1e-12).value - 4.0 / kPi) <= 1e-12);
}

TEST_CASE("fsharp of exp gives 1/k! at integers and is bounded") {
  const BoundaryFunction e = BoundaryFunction::exponential();
  double factorial = 1.0;
  for (int k = 0; k <= 10; ++k) {
    if (k > 0) factorial *= k;
    CHECK(std::abs(fsharp(e, k, 1e-13).value - 1.0 / factorial) <= 1e-13);
    CHECK(std::abs(fsharp(e, -k - 1.0, 1e-13).value) <= 1e-13);
  }
}

TEST_CASE("fsharp_binomial examples") {
  CHECK(fsharp_binomial(3, 2) == 3.0);
  CHECK(fsharp_binomial(1, 0.5) == doctest::Approx(4.0 / kPi).epsilon(1e-14));
  CHECK_THROWS_AS(fsharp_binomial(0.0, 1.0), PreconditionError);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> pick_t(0.1, 8.0);
  std::uniform_real_distribution<double> pick_xi(-20.0, 20.0);
  for (int i = 0; i < 200; ++i) {
    const double t = pick_t(rng);
    const double xi = pick_xi(rng);
    const double a = fsharp_binomial(t, xi);
    CHECK(std::abs(a - fsharp_binomial(t, t - xi)) <= 1e-12 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("quadrature f# agrees with the closed form") {
  for (double t : {0.5, 1.0, 2.5, 5.0}) {
    const BoundaryFunction f = BoundaryFunction::binomial(t);
    for (double xi : {-5.0, -1.3, 0.0, 0.7, 2.0, 7.1}) {
      const FracCoefficient c = fsharp(f, xi, 1e-10);
      CHECK(std::abs(c.value - fsharp_binomial(t, xi)) <= 1e-8);
      CHECK(c.xi == xi);
      CHECK(c.quad_error_estimate >= 0.0);
    }
  }
}

TEST_CASE("f# is bounded by the sup of f") {
  const double tol = 1e-10;
  for (const BoundaryFunction& f :
       {BoundaryFunction::binomial(0.5), BoundaryFunction::binomial(3.0),
        BoundaryFunction::exponential()}) {
    for (double xi = -30.0; xi <= 30.0; xi += 0.73) {
      const FracCoefficient c = fsharp(f, xi, tol);
      CHECK(std::abs(c.value) <= f.sup_bound() + tol);
    }
  }
}

TEST_CASE("C^2 boundary data vanishing at -1 gives O(xi^-2) coefficients") {
  const BoundaryFunction square = BoundaryFunction::binomial(2.0);
  CHECK(square.smoothness() == Smoothness::analytic_on_closure);
  const BoundaryFunction f = BoundaryFunction::binomial(2.5);
  CHECK(f.smoothness() == Smoothness::c2_vanishing_at_minus_one);
  for (const BoundaryFunction* g : {&square, &f}) {
    double worst = 0.0;
    for (double m = 10.0; m <= 100.0; m += 0.37) {
      worst = std::max(worst, std::abs(fsharp(*g, m, 1e-12).value) * m * m);
      worst = std::max(worst, std::abs(fsharp(*g, -m, 1e-12).value) * m * m);
    }
    CHECK(worst <= 2.0);
  }
}

TEST_CASE("real Taylor coefficients give real f#") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> pick(-25.0, 25.0);
  const double tol = 1e-11;
  for (const BoundaryFunction& f :
       {BoundaryFunction::binomial(1.5), BoundaryFunction::exponential()}) {
    for (int i = 0; i < 50; ++i) CHECK(std::abs(fsharp(f, pick(rng), tol).value.imag()) <= tol);
  }
}

TEST_CASE("BoundaryFunction construction") {
  CHECK_THROWS_AS(BoundaryFunction::binomial(0.0), PreconditionError);
  CHECK_THROWS_AS(
      BoundaryFunction("open", [](cplx z) { return z; }, [](double x) { return cplx(x, 0.0); },
                       Smoothness::continuous_only),
      PreconditionError);

  const BoundaryFunction probed = BoundaryFunction::from_disk(
      "z^2 + 1", [](cplx z) { return z * z + 1.0; }, Smoothness::analytic_on_closure);
  CHECK(probed.sup_bound() >= 2.0 - 1e-12);
  CHECK(probed.sup_bound() <= 2.0 + 1e-12);
  CHECK(probed(cplx(0.0, 0.0)) == cplx(1.0, 0.0));
  CHECK_FALSE(probed.binomial_exponent().has_value());

  const BoundaryFunction b = BoundaryFunction::binomial(0.5);
  CHECK(b.sup_bound() >= std::sqrt(2.0));
  CHECK(b.smoothness() == Smoothness::continuous_only);
  REQUIRE(b.binomial_exponent().has_value());
  CHECK(*b.binomial_exponent() == 0.5);
  // The circle evaluator agrees with the disk evaluator away from -1.
  for (double x = -0.45; x <= 0.45; x += 0.05) {
    const cplx z = std::polar(1.0, 2.0 * kPi * x);
    CHECK(std::abs(b.on_circle(x) - b(z)) <= 1e-13);
  }
}

TEST_CASE("fsharp preconditions and node cap") {
  const BoundaryFunction e = BoundaryFunction::exponential();
  CHECK_THROWS_AS(fsharp(e, 1.0, 0.0), PreconditionError);
  CHECK_THROWS_AS(fsharp(e, std::nan(""), 1e-10), PreconditionError);
  const BoundaryFunction rough = BoundaryFunction::from_disk(
      "|Re z|^0.01", [](cplx z) { return cplx(std::pow(std::abs(z.real()), 0.01), 0.0); },
      Smoothness::continuous_only);
  try {
    fsharp(rough, 0.25, 1e-15);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& err) {
    CHECK(std::isfinite(err.best_value()));
  }
}
