#pragma once

// Radial estimation of angular limits and angular derivatives at points of
// the unit circle, with Richardson extrapolation in h = 1 - r over the
// geometric radii r_m = 1 - 2^{-m}.

#include <functional>
#include <span>
#include <vector>

#include "digon/conformal_maps.hpp"

namespace digon {

/// The radial sequence oscillates or wanders instead of settling.
class NoLimitError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The difference quotient (or derivative) grows without bound.
class InfiniteDerivativeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

struct AngularEstimate {
  Complex value;
  double error_bound = 0.0;  // observed extrapolation residual
  int radii_used = 0;
  bool flagged = false;  // difference-quotient and derivative routes disagree
};

struct AngularOptions {
  int m_min = 3;
  int m_max = 48;
  int max_order = 8;
  double target = 1e-12;   // stop once successive extrapolants agree to this (relative)
  double accept = 1e-6;    // residual above this (relative) means no limit
  double consensus_factor = 10.0;
  double consensus_floor = 1e-12;  // relative; keeps round-off from tripping the consensus rule
};

struct Extrapolation {
  Complex value;
  double error = 0.0;
  int samples = 0;
  bool converged = false;
  std::vector<Complex> raw;  // f(h_m) in order of increasing m
};

/// Absolute noise level of `sample` taken at h; extrapolants never claim a
/// residual below the noise of the samples they combine.
using NoiseModel = std::function<double(double h, Complex sample)>;

/// Richardson extrapolation of f(h) -> f(0) along h_m = 2^{-m}, m = m_min..m_max,
/// assuming an expansion in integer powers of h. Keeps the extrapolant with
/// the smallest residual; stops early on agreement below `target`.
Extrapolation richardson_radial(const std::function<Complex(double h)>& sample, const AngularOptions& opts,
                                const NoiseModel& noise = {});

/// Same extrapolation over precomputed samples at consecutive h_m = 2^{-m}.
Extrapolation richardson_sequence(std::span<const Complex> samples, const AngularOptions& opts,
                                  const NoiseModel& noise = {});

using ComplexFn = std::function<Complex(Complex)>;

AngularEstimate angular_limit(const ComplexFn& f, CirclePoint at, const AngularOptions& opts = {});
AngularEstimate angular_limit(const MapExpr& expr, CirclePoint at, const AngularOptions& opts = {});

/// Consensus of the radial difference quotient (f(r zeta) - limit)/(r zeta - zeta)
/// and the radial limit of f'. Throws InfiniteDerivativeError on divergence.
AngularEstimate angular_derivative(const ComplexFn& f, const ComplexFn& df, CirclePoint at, Complex limit,
                                   const AngularOptions& opts = {});
AngularEstimate angular_derivative(const MapExpr& expr, CirclePoint at, Complex limit,
                                   const AngularOptions& opts = {});

/// RHS - LHS of Julia's inequality at the anchor zeta0 = e^{i at}:
///   |zeta0 - f(z)|^2 / (1 - |f(z)|^2)  <=  beta |zeta0 - z|^2 / (1 - |z|^2).
double julia_quotient_check(const MapExpr& expr, CirclePoint at, double beta, DiskPoint sample);

}  // namespace digon
