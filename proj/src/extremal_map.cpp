#include "digon/extremal_map.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>

#include "digon/bounds.hpp"

namespace digon {

MapExpr extremal_theorem_a(DiskPoint z, DiskPoint w, double beta) {
  const double alpha = alpha_star_relation(z.value(), w.value(), beta);
  const auto map = MapExpr::compose({MapExpr::moebius(z), MapExpr::pick(alpha), MapExpr::moebius(w).inverse()});

  if (std::abs(map.eval(z.value()) - w.value()) > 1e-12) {
    throw NumericalError("extremal map misses the prescribed image point");
  }
  const auto measured = angular_derivative(map, CirclePoint{0.0}, Complex(1.0));
  if (std::abs(measured.value - beta) > 1e-6 * std::max(1.0, beta)) {
    throw NumericalError("extremal map has the wrong angular derivative at 1");
  }
  const double actual = std::abs(map.deriv(z.value()));
  const double bound = bound_theorem_a(z.value(), w.value(), beta, Variant::DerivedConsistent);
  if (std::abs(actual - bound) > 1e-9 * std::max(1.0, bound)) {
    throw NumericalError("extremal map does not attain the bound");
  }
  return map;
}

double SampledMap::max_qd_residual() const {
  double worst = 0.0;
  for (const auto& ray : rays) {
    for (const auto& s : ray.samples) worst = std::max(worst, s.qd_residual);
  }
  return worst;
}

Complex extremal_invariant(const ExtremalConfig& config, Complex x) {
  Complex log_k = std::log(x);
  for (std::size_t k : config.active()) {
    log_k -= 2.0 * config.heights.alphas[k] * std::log(1.0 - x * std::conj(config.anchors.point(k)));
  }
  return std::exp(log_k);
}

Complex extremal_series(const ExtremalConfig& config, double c, Complex zeta) {
  Complex a = 0.0;
  Complex b = 0.0;
  for (std::size_t k : config.active()) {
    const Complex inv = std::conj(config.anchors.point(k));
    a += 2.0 * config.heights.alphas[k] * inv;
    b += config.heights.alphas[k] * inv * inv;
  }
  const Complex w1 = a * (1.0 - c);
  const Complex w2 = b * (1.0 - c * c) + 0.5 * w1 * w1 - a * c * w1;
  return c * zeta * (1.0 + zeta * (w1 + zeta * w2));
}

namespace {

// 1/x - 2 sum_k alpha_k/(x - zeta_k); proportional to sqrt(Q).
Complex log_invariant_derivative(const ExtremalConfig& config, Complex x) {
  Complex acc = 1.0 / x;
  for (std::size_t k : config.active()) acc -= 2.0 * config.heights.alphas[k] / (x - config.anchors.point(k));
  return acc;
}

double transport_residual(const ExtremalConfig& config, Complex zeta, Complex w, Complex slope) {
  const Complex qz = q_eval(config, zeta);
  const Complex qw = q_eval(config, w);
  const double denom = std::abs(qz) + std::abs(qw) * std::norm(slope);
  if (denom == 0.0) return 0.0;
  return std::abs(qz - qw * slope * slope) / denom;
}

bool same_angle(double a, double b) {
  const double d = std::abs(CirclePoint::normalize(a) - CirclePoint::normalize(b));
  return std::min(d, kTwoPi - d) < 1e-12;
}

}  // namespace

Complex extremal_slope(const ExtremalConfig& config, Complex zeta, Complex w) {
  return log_invariant_derivative(config, zeta) / log_invariant_derivative(config, w);
}

double level_radius(int m) { return 1.0 - std::ldexp(1.0, -m); }

std::vector<double> anchor_ray_angles(const ExtremalConfig& config) {
  std::vector<double> out;
  for (std::size_t k : config.active()) out.push_back(config.anchors.angles[k]);
  return out;
}

SampledMap integrate_extremal_ode(const ExtremalConfig& config, double c, std::span<const double> ray_angles,
                                  double r_max, const ExtremalOdeOptions& opts) {
  if (!(c > 0.0 && c <= 1.0)) throw DomainError("origin slope c must lie in (0, 1]");
  if (!(r_max > opts.r0 && r_max < 1.0)) throw DomainError("r_max must lie in (r0, 1)");

  SampledMap out;
  out.origin_slope = c;
  out.config = config;
  out.finest_level = 2;

  std::vector<double> checkpoints;
  for (int k = 1; k <= 9; ++k) checkpoints.push_back(0.1 * k);
  for (int m = 3; m <= opts.finest_level && level_radius(m) <= r_max; ++m) {
    checkpoints.push_back(level_radius(m));
    out.finest_level = m;
  }

  for (double sigma : ray_angles) {
    const Complex dir = std::polar(1.0, sigma);
    Ray ray;
    ray.angle = sigma;
    auto record = [&](double r, Complex w, double step) {
      if (!(std::abs(w) < 1.0)) throw NumericalError("integration fault: the solution left the unit disk");
      const Complex zeta = r * dir;
      const Complex slope = extremal_slope(config, zeta, w);
      ray.samples.push_back({r, zeta, w, step, transport_residual(config, zeta, w, slope)});
      return true;
    };
    const auto rhs = [&](double r, Complex w) { return dir * extremal_slope(config, r * dir, w); };
    const Complex w0 = extremal_series(config, c, opts.r0 * dir);
    record(opts.r0, w0, 0.0);
    const auto result = integrate_dopri(rhs, opts.r0, w0, r_max, checkpoints, opts.ode,
                                        [&](const OdeStep& s) { return record(s.t, s.y, s.step); });
    ray.truncated = result.truncated;
    ray.last_good_radius = result.last_good_t;
    ray.reason = result.reason;
    out.rays.push_back(std::move(ray));
  }
  return out;
}

AngularEstimate measure_beta(const SampledMap& sampled, std::size_t j) {
  const auto& config = sampled.config;
  if (j >= config.size()) throw InputError("anchor index out of range");
  const double theta = config.anchors.angles[j];
  const auto it = std::find_if(sampled.rays.begin(), sampled.rays.end(),
                               [&](const Ray& r) { return same_angle(r.angle, theta); });
  if (it == sampled.rays.end()) throw InsufficientDataError("no ray toward the requested anchor");
  if (it->truncated) throw InsufficientDataError("ray toward the anchor was truncated: " + it->reason);
  if (it->last_good_radius < 0.99) throw InsufficientDataError("ray toward the anchor stops before r = 0.99");

  const Complex anchor = config.anchors.point(j);
  std::vector<Complex> quotients;
  for (int m = 3; m <= sampled.finest_level; ++m) {
    const double r = level_radius(m);
    const auto s = std::find_if(it->samples.begin(), it->samples.end(), [&](const RaySample& x) { return x.r == r; });
    if (s == it->samples.end()) break;
    quotients.push_back((anchor - s->w) / (anchor - s->zeta));
  }
  if (quotients.size() < 4) throw InsufficientDataError("too few level radii on the anchor ray");

  AngularOptions opts;
  opts.m_min = 3;
  opts.accept = 1e-5;
  const auto e = richardson_sequence(quotients, opts);
  if (!(e.error <= opts.accept * std::max(1.0, std::abs(e.value)))) {
    throw NoLimitError("boundary difference quotients do not settle");
  }
  return {e.value, e.error, e.samples, false};
}

EqualityReport equality_audit(const ExtremalConfig& config, double c, const ExtremalOdeOptions& opts) {
  EqualityReport report;
  report.c = c;
  report.betas.assign(config.size(), 1.0);
  const auto angles = anchor_ray_angles(config);
  const auto sampled = integrate_extremal_ode(config, c, angles, level_radius(opts.finest_level), opts);
  double log_product = 0.0;
  for (std::size_t k : config.active()) {
    const double beta = measure_beta(sampled, k).value.real();
    report.betas[k] = beta;
    const double a = config.heights.alphas[k];
    log_product -= 2.0 * a * a * std::log(beta);
  }
  report.product = std::exp(log_product);
  report.residual = std::abs(c - report.product);
  return report;
}

nlohmann::json equality_to_json(const EqualityReport& report) {
  return {{"c", report.c}, {"beta", report.betas}, {"product", report.product}, {"residual", report.residual}};
}

double solve_slope_for_beta(const ExtremalConfig& config, std::size_t j, double target_beta,
                            const ExtremalOdeOptions& opts) {
  if (j >= config.size() || config.heights.alphas[j] <= 0.0) throw InputError("anchor must have positive height");
  if (!(target_beta >= 1.0) || !std::isfinite(target_beta)) throw DomainError("target beta must be >= 1");
  if (target_beta == 1.0) return 1.0;

  const double angle = config.anchors.angles[j];
  auto beta_at = [&](double c) {
    const auto sampled = integrate_extremal_ode(config, c, std::span<const double>(&angle, 1),
                                                level_radius(opts.finest_level), opts);
    return measure_beta(sampled, j).value.real();
  };
  // The measured beta decreases as c grows; bracket the target in log c.
  double lo = 0.0;  // log c with beta >= target
  double hi = 0.0;  // log c with beta <= target (c = 1 gives beta = 1)
  lo = -1.0;
  while (beta_at(std::exp(lo)) < target_beta) {
    lo *= 2.0;
    if (lo < -200.0) throw NumericalError("target beta is out of reach of the slope family");
  }
  for (int i = 0; i < 60 && hi - lo > 1e-13; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (beta_at(std::exp(mid)) >= target_beta) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::exp(0.5 * (lo + hi));
}

void write_ray_csv(const Ray& ray, std::ostream& out) {
  out << "r,zeta_re,zeta_im,w_re,w_im,step,qd_residual\n";
  out << std::setprecision(17);
  for (const auto& s : ray.samples) {
    out << s.r << ',' << s.zeta.real() << ',' << s.zeta.imag() << ',' << s.w.real() << ',' << s.w.imag() << ','
        << s.step << ',' << s.qd_residual << '\n';
  }
}

}  // namespace digon
