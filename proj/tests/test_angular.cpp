#include "doctest.h"

#include "digon/angular.hpp"

using namespace digon;

namespace {

MapExpr t_c(double c) { return MapExpr::automorphism(DiskPoint{-c, 0.0}, 0.0); }

}  // namespace

TEST_CASE("angular_limit examples") {
  CHECK(std::abs(angular_limit(t_c(0.5), CirclePoint{0.0}).value - 1.0) < 1e-12);
  CHECK(std::abs(angular_limit(MapExpr::rotation(kPi / 2), CirclePoint{0.0}).value - Complex(0.0, 1.0)) < 1e-12);
  CHECK(std::abs(angular_limit(MapExpr::pick(0.25), CirclePoint{0.0}).value - 1.0) < 1e-10);
}

TEST_CASE("angular_derivative examples") {
  const auto t = angular_derivative(t_c(0.5), CirclePoint{0.0}, 1.0);
  CHECK(t.value.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK_FALSE(t.flagged);
  for (double angle : {0.0, 1.0, 4.0}) {
    const CirclePoint at{angle};
    CHECK(std::abs(angular_derivative(MapExpr::identity(), at, at.value()).value - 1.0) < 1e-12);
  }
  const auto p = angular_derivative(MapExpr::pick(0.25), CirclePoint{0.0}, 1.0);
  CHECK(std::abs(p.value - 2.0) < 1e-6);
  CHECK(p.error_bound < 1e-6);
  CHECK(p.radii_used > 0);
}

TEST_CASE("julia_quotient_check examples") {
  CHECK(julia_quotient_check(t_c(0.5), CirclePoint{0.0}, 1.0 / 3.0, DiskPoint{}) == doctest::Approx(0.0));
  CHECK(julia_quotient_check(MapExpr::pick(0.25), CirclePoint{0.0}, 2.0, DiskPoint{}) == doctest::Approx(1.0));
  CHECK(julia_quotient_check(MapExpr::identity(), CirclePoint{2.0}, 1.0, DiskPoint{0.3, 0.1}) ==
        doctest::Approx(0.0));
}

TEST_CASE("automorphisms fixing e^{i theta} match their closed-form derivative") {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const double theta = rng.uniform(0.0, kTwoPi);
    const double c = rng.uniform(-0.9, 0.9);
    const auto map = MapExpr::compose({MapExpr::rotation(-theta), t_c(c), MapExpr::rotation(theta)});
    const CirclePoint at{theta};
    const auto e = angular_derivative(map, at, at.value());
    CHECK(std::abs(e.value - (1.0 - c) / (1.0 + c)) < 1e-8);
    CHECK(std::abs(e.value.imag()) < 1e-8);
    CHECK_FALSE(e.flagged);
    for (int k = 0; k < 5; ++k) {
      CHECK(julia_quotient_check(map, at, (1.0 - c) / (1.0 + c), DiskPoint{rng.in_disk(0.99)}) >= -1e-10);
    }
  }
}

TEST_CASE("Pick angular derivative is 1/sqrt(alpha)") {
  for (double a : {0.1, 0.25, 0.5, 0.9}) {
    const auto e = angular_derivative(MapExpr::pick(a), CirclePoint{0.0}, 1.0);
    CHECK(std::abs(e.value - 1.0 / std::sqrt(a)) < 1e-6);
    CHECK_FALSE(e.flagged);
  }
}

TEST_CASE("divergence and missing limits are signalled") {
  // z^2 has angular derivative 2 at 1, but at -1 with limit 1 the quotient still settles.
  const ComplexFn blow = [](Complex z) { return 1.0 / (1.0 - z); };
  const ComplexFn blow_d = [](Complex z) { return 1.0 / ((1.0 - z) * (1.0 - z)); };
  CHECK_THROWS_AS(angular_derivative(blow, blow_d, CirclePoint{0.0}, 0.0), InfiniteDerivativeError);
  const ComplexFn wobble = [](Complex z) { return Complex(std::sin(1.0 / (1.0 - std::abs(z))), 0.0); };
  CHECK_THROWS_AS(angular_limit(wobble, CirclePoint{0.0}), NoLimitError);
}

TEST_CASE("Richardson extrapolation recovers a polynomial limit") {
  AngularOptions opts;
  const auto e = richardson_radial([](double h) { return Complex(2.0 + 3.0 * h - 5.0 * h * h + h * h * h); }, opts);
  CHECK(e.converged);
  CHECK(std::abs(e.value - 2.0) < 1e-12);
  std::vector<Complex> samples;
  for (int m = 3; m < 15; ++m) samples.push_back(1.0 + std::ldexp(1.0, -m));
  CHECK(std::abs(richardson_sequence(samples, opts).value - 1.0) < 1e-13);
}
