#include "digon/angular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace digon {

namespace {

double scale(Complex v) { return std::max(1.0, std::abs(v)); }

class RichardsonTable {
 public:
  explicit RichardsonTable(const AngularOptions& opts) : opts_(opts) {}

  // Adds f(h_m) for the next m; returns true once converged.
  bool push(Complex sample, double noise) {
    result_.raw.push_back(sample);
    // Each elimination step at most triples the propagated sample noise.
    double floor = noise;
    std::vector<Complex> row{sample};
    const int order = std::min<int>(static_cast<int>(prev_.size()), opts_.max_order);
    for (int k = 1; k <= order; ++k) {
      const double factor = std::ldexp(1.0, k) - 1.0;
      const Complex next = row[k - 1] + (row[k - 1] - prev_[k - 1]) / factor;
      floor *= 3.0;
      const double err = std::max({std::abs(next - row[k - 1]), std::abs(next - prev_[k - 1]), floor});
      row.push_back(next);
      if (err < best_err_) {
        best_err_ = err;
        result_.value = next;
      }
    }
    if (result_.raw.size() == 1) result_.value = sample;
    prev_ = std::move(row);
    result_.samples = static_cast<int>(result_.raw.size());
    result_.error = std::isfinite(best_err_) ? best_err_ : std::numeric_limits<double>::infinity();
    result_.converged = best_err_ < opts_.target * scale(result_.value);
    return result_.converged;
  }

  Extrapolation result() const { return result_; }

 private:
  const AngularOptions& opts_;
  std::vector<Complex> prev_;
  double best_err_ = std::numeric_limits<double>::infinity();
  Extrapolation result_;
};

bool accepted(const Extrapolation& e, const AngularOptions& opts) {
  return std::isfinite(std::abs(e.value)) && e.error <= opts.accept * scale(e.value);
}

// Raw samples growing steadily in modulus over the tail: the quantity blows up.
bool diverging(const Extrapolation& e) {
  const auto& raw = e.raw;
  if (raw.size() < 6) return false;
  for (const auto& v : raw) {
    if (!std::isfinite(std::abs(v))) return true;
  }
  const std::size_t n = raw.size();
  for (std::size_t i = n - 4; i < n; ++i) {
    if (!(std::abs(raw[i]) > std::abs(raw[i - 1]))) return false;
  }
  return std::abs(raw.back()) > 10.0 * std::max(std::abs(raw.front()), 1e-300);
}

}  // namespace

Extrapolation richardson_radial(const std::function<Complex(double)>& sample, const AngularOptions& opts,
                                const NoiseModel& noise) {
  RichardsonTable table(opts);
  for (int m = opts.m_min; m <= opts.m_max; ++m) {
    const double h = std::ldexp(1.0, -m);
    const Complex v = sample(h);
    if (table.push(v, noise ? noise(h, v) : 0.0)) break;
  }
  return table.result();
}

Extrapolation richardson_sequence(std::span<const Complex> samples, const AngularOptions& opts,
                                  const NoiseModel& noise) {
  RichardsonTable table(opts);
  int m = opts.m_min;
  for (const auto& s : samples) {
    if (table.push(s, noise ? noise(std::ldexp(1.0, -m), s) : 0.0)) break;
    ++m;
  }
  return table.result();
}

AngularEstimate angular_limit(const ComplexFn& f, CirclePoint at, const AngularOptions& opts) {
  const Complex dir = at.value();
  const auto e = richardson_radial([&](double h) { return f((1.0 - h) * dir); }, opts);
  if (!accepted(e, opts)) {
    throw NoLimitError("radial values do not settle toward an angular limit");
  }
  return {e.value, e.error, e.samples, false};
}

AngularEstimate angular_limit(const MapExpr& expr, CirclePoint at, const AngularOptions& opts) {
  return angular_limit([&expr](Complex z) { return expr.eval(z); }, at, opts);
}

AngularEstimate angular_derivative(const ComplexFn& f, const ComplexFn& df, CirclePoint at, Complex limit,
                                   const AngularOptions& opts) {
  const Complex dir = at.value();
  // Values near the boundary carry round-off of order eps; the quotient divides
  // it by h, and derivative formulas built from 1 - |f| lose the same factor.
  const double eps = std::numeric_limits<double>::epsilon();
  const auto quotient = richardson_radial(
      [&](double h) { return (f((1.0 - h) * dir) - limit) / (-h * dir); }, opts,
      [&](double h, Complex) { return 4.0 * eps * std::max(1.0, std::abs(limit)) / h; });
  const auto derivative =
      richardson_radial([&](double h) { return df((1.0 - h) * dir); }, opts,
                        [&](double h, Complex v) { return 8.0 * eps * std::max(1.0, std::abs(v)) / h; });

  for (const auto* e : {&quotient, &derivative}) {
    if (!accepted(*e, opts)) {
      if (diverging(*e)) throw InfiniteDerivativeError("angular derivative is infinite");
      throw NoLimitError("radial difference quotients do not converge");
    }
  }

  const auto& best = quotient.error <= derivative.error ? quotient : derivative;
  const double gap = std::abs(quotient.value - derivative.value);
  const double allowed =
      opts.consensus_factor *
      std::max({quotient.error, derivative.error, opts.consensus_floor * scale(best.value)});
  AngularEstimate out;
  out.value = best.value;
  out.error_bound = std::max(best.error, gap);
  out.radii_used = quotient.samples + derivative.samples;
  out.flagged = gap > allowed;
  return out;
}

AngularEstimate angular_derivative(const MapExpr& expr, CirclePoint at, Complex limit,
                                   const AngularOptions& opts) {
  return angular_derivative([&expr](Complex z) { return expr.eval(z); },
                            [&expr](Complex z) { return expr.deriv(z); }, at, limit, opts);
}

double julia_quotient_check(const MapExpr& expr, CirclePoint at, double beta, DiskPoint sample) {
  const Complex anchor = at.value();
  const Complex z = sample.value();
  const Complex w = expr.eval(z);
  const double lhs = std::norm(anchor - w) / (1.0 - std::norm(w));
  const double rhs = beta * std::norm(anchor - z) / (1.0 - std::norm(z));
  return rhs - lhs;
}

}  // namespace digon
