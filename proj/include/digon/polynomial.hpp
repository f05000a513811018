#pragma once

#include <span>
#include <vector>

#include "digon/types.hpp"

namespace digon {

/// Coefficients in increasing degree: c[0] + c[1] z + ... + c[n] z^n.
using ComplexPoly = std::vector<Complex>;

Complex poly_eval(std::span<const Complex> coeffs, Complex z);
ComplexPoly poly_derivative(std::span<const Complex> coeffs);

/// Product of (z - r) over the given roots (monic).
ComplexPoly poly_from_roots(std::span<const Complex> roots);

struct RootOptions {
  int max_iterations = 500;
  double tolerance = 1e-15;  // relative correction size at which a root is frozen
};

/// All roots of a polynomial by Aberth-Ehrlich simultaneous iteration.
/// `initial` may supply one starting guess per root; otherwise guesses are
/// spread on a circle of Cauchy-bound radius. Throws NumericalError if the
/// iteration does not settle.
std::vector<Complex> poly_roots(std::span<const Complex> coeffs, std::span<const Complex> initial = {},
                                const RootOptions& opts = {});

}  // namespace digon
