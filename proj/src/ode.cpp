#include "digon/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace digon {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

OdeResult integrate_dopri(const OdeRhs& f, double t0, Complex y0, double t1, std::span<const double> checkpoints,
                          const OdeOptions& opts, const OdeObserver& observer) {
  if (!(t1 > t0)) throw InputError("integration interval must be increasing");
  std::vector<double> marks;
  for (double c : checkpoints) {
    if (c > t0 && c < t1) marks.push_back(c);
  }
  marks.push_back(t1);
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

  OdeResult result;
  result.steps.push_back({t0, y0, 0.0});
  result.last_good_t = t0;

  double t = t0;
  Complex y = y0;
  double h = std::min(opts.initial_step, opts.max_step);
  std::size_t next_mark = 0;
  Complex k1 = f(t, y);
  if (!finite(k1)) {
    result.truncated = true;
    result.reason = "slope is not finite at the start point";
    return result;
  }

  for (int n = 0; n < opts.max_steps; ++n) {
    const double target = marks[next_mark];
    bool clipped = false;
    double step = h;
    if (t + step >= target) {
      step = target - t;
      clipped = true;
    }

    const Complex k2 = f(t + c2 * step, y + step * (a21 * k1));
    const Complex k3 = f(t + c3 * step, y + step * (a31 * k1 + a32 * k2));
    const Complex k4 = f(t + c4 * step, y + step * (a41 * k1 + a42 * k2 + a43 * k3));
    const Complex k5 = f(t + c5 * step, y + step * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Complex k6 = f(t + step, y + step * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Complex y_new = y + step * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Complex k7 = f(t + step, y_new);
    const Complex err_vec = step * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    const bool ok = finite(y_new) && finite(k7) && finite(err_vec);
    const double scale = opts.atol + opts.rtol * std::max(std::abs(y), ok ? std::abs(y_new) : 0.0);
    const double err = ok ? std::abs(err_vec) / scale : std::numeric_limits<double>::infinity();

    if (err <= 1.0) {
      t = clipped ? target : t + step;
      y = y_new;
      k1 = k7;
      const OdeStep accepted{t, y, step};
      result.steps.push_back(accepted);
      result.last_good_t = t;
      if (observer && !observer(accepted)) {
        result.truncated = true;
        result.reason = "stopped by observer";
        return result;
      }
      if (clipped) {
        ++next_mark;
        if (next_mark == marks.size()) return result;
      }
      const double grow = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      // A clipped step says nothing about the natural step size; keep h.
      if (!clipped) h = std::min(step * grow, opts.max_step);
    } else {
      const double shrink = std::isfinite(err) ? std::clamp(0.9 * std::pow(err, -0.25), 0.1, 0.9) : 0.1;
      h = step * shrink;
      if (h < opts.min_step) {
        result.truncated = true;
        result.reason = "step size collapsed";
        return result;
      }
    }
  }
  result.truncated = true;
  result.reason = "step budget exhausted";
  return result;
}

}  // namespace digon
