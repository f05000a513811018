#include "doctest.h"

#include <algorithm>

#include "digon/polynomial.hpp"
#include "digon/types.hpp"

using namespace digon;

TEST_CASE("evaluation and derivative") {
  const ComplexPoly p{1.0, -3.0, 0.0, 2.0};
  CHECK(std::abs(poly_eval(p, 2.0) - Complex(11.0)) < 1e-15);
  const auto d = poly_derivative(p);
  REQUIRE(d.size() == 3);
  CHECK(std::abs(d[0] + 3.0) == 0.0);
  CHECK(std::abs(d[2] - 6.0) == 0.0);
}

TEST_CASE("roots of unity") {
  const ComplexPoly p{-1.0, 0.0, 0.0, 0.0, 0.0, 1.0};
  const auto roots = poly_roots(p);
  REQUIRE(roots.size() == 5);
  for (const auto& r : roots) CHECK(std::abs(std::pow(r, 5) - 1.0) < 1e-13);
}

TEST_CASE("roots recovered from a product") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> roots;
    const int n = 1 + static_cast<int>(rng.below(7));
    for (int k = 0; k < n; ++k) roots.push_back(std::polar(1.0, rng.uniform(0.0, kTwoPi)));
    const auto found = poly_roots(poly_from_roots(roots));
    REQUIRE(found.size() == roots.size());
    for (const auto& r : roots) {
      double best = 1e300;
      for (const auto& f : found) best = std::min(best, std::abs(f - r));
      CHECK(best < 1e-7);
    }
  }
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(poly_roots(ComplexPoly{0.0, 0.0}), InputError);
  CHECK(poly_roots(ComplexPoly{3.0}).empty());
}
