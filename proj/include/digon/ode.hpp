#pragma once

// Adaptive Dormand-Prince 5(4) integration of a scalar complex ODE
// dy/dt = f(t, y) over a real interval, with exact landing on checkpoints.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "digon/types.hpp"

namespace digon {

struct OdeOptions {
  double rtol = 1e-13;
  double atol = 1e-15;
  double initial_step = 1e-4;
  double min_step = 1e-12;  // below this the run stops with a truncation signal
  double max_step = 0.05;
  int max_steps = 1'000'000;
};

struct OdeStep {
  double t = 0.0;
  Complex y;
  double step = 0.0;  // size of the step that produced this point (0 for the start)
};

struct OdeResult {
  std::vector<OdeStep> steps;  // accepted points, starting with (t0, y0)
  bool truncated = false;
  double last_good_t = 0.0;
  std::string reason;
};

using OdeRhs = std::function<Complex(double t, Complex y)>;
/// Called after every accepted step; returning false stops the run as truncated.
using OdeObserver = std::function<bool(const OdeStep& step)>;

/// Integrates from t0 to t1 > t0. Steps are clipped so that every value in
/// `checkpoints` inside (t0, t1] is hit exactly. Non-finite slopes count as
/// rejected steps; the run is truncated when the step size falls below
/// `min_step` or the step budget is exhausted.
OdeResult integrate_dopri(const OdeRhs& f, double t0, Complex y0, double t1, std::span<const double> checkpoints,
                          const OdeOptions& opts = {}, const OdeObserver& observer = {});

}  // namespace digon
