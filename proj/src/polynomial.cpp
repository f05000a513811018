#include "digon/polynomial.hpp"

#include <algorithm>
#include <limits>

namespace digon {

Complex poly_eval(std::span<const Complex> coeffs, Complex z) {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPoly poly_derivative(std::span<const Complex> coeffs) {
  if (coeffs.size() <= 1) return {Complex(0.0)};
  ComplexPoly d(coeffs.size() - 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs[k];
  return d;
}

ComplexPoly poly_from_roots(std::span<const Complex> roots) {
  ComplexPoly p{Complex(1.0)};
  for (const auto& r : roots) {
    ComplexPoly next(p.size() + 1, Complex(0.0));
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= r * p[k];
    }
    p = std::move(next);
  }
  return p;
}

std::vector<Complex> poly_roots(std::span<const Complex> coeffs, std::span<const Complex> initial,
                                const RootOptions& opts) {
  std::size_t degree = coeffs.size();
  while (degree > 0 && coeffs[degree - 1] == Complex(0.0)) --degree;
  if (degree == 0) throw InputError("zero polynomial has no well-defined roots");
  --degree;
  if (degree == 0) return {};

  const auto p = coeffs.first(degree + 1);
  const auto dp = poly_derivative(p);

  std::vector<Complex> z;
  if (initial.size() == degree) {
    z.assign(initial.begin(), initial.end());
  } else {
    double bound = 0.0;
    for (std::size_t k = 0; k < degree; ++k) bound = std::max(bound, std::abs(p[k] / p[degree]));
    const double radius = 1.0 + bound;
    for (std::size_t k = 0; k < degree; ++k) {
      // Offset angle breaks symmetry with real-coefficient polynomials.
      z.push_back(std::polar(radius, kTwoPi * (static_cast<double>(k) + 0.25) / static_cast<double>(degree) + 0.4));
    }
  }

  std::vector<bool> frozen(degree, false);
  std::vector<double> last_step(degree, std::numeric_limits<double>::infinity());
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    bool all_frozen = true;
    for (std::size_t i = 0; i < degree; ++i) {
      if (frozen[i]) continue;
      const Complex pv = poly_eval(p, z[i]);
      if (pv == Complex(0.0)) {
        frozen[i] = true;
        continue;
      }
      const Complex ratio = pv / poly_eval(dp, z[i]);
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < degree; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[i] -= step;
      const double size = std::abs(step);
      const double tiny = opts.tolerance * std::max(1.0, std::abs(z[i]));
      // Converged, or stalled at the round-off floor.
      if (size <= tiny || (size >= last_step[i] && size <= 1e7 * tiny)) {
        frozen[i] = true;
      } else {
        all_frozen = false;
      }
      last_step[i] = size;
    }
    if (all_frozen) return z;
  }
  throw NumericalError("polynomial root iteration did not converge");
}

}  // namespace digon
