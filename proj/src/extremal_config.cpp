#include "digon/extremal_config.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace digon {

namespace {

constexpr double kCircleTolerance = 1e-6;  // pre-projection modulus check
constexpr double kLabelSlack = 1e-8;       // a root may sit this far outside its arc before polishing
constexpr double kVertexTolerance = 1e-14;

// Angle lifted into [base, base + 2 pi).
double lift(double angle, double base) {
  double t = std::fmod(angle - base, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return base + t;
}

struct Arc {
  std::size_t anchor;  // index of theta_j
  double lo;           // theta_j
  double hi;           // next active theta, lifted above lo
};

std::vector<Arc> active_arcs(const BoundaryAnchorSet& anchors, const std::vector<std::size_t>& active) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < active.size(); ++i) {
    const std::size_t j = active[i];
    const std::size_t next = active[(i + 1) % active.size()];
    double hi = anchors.angles[next];
    if (hi <= anchors.angles[j]) hi += kTwoPi;
    arcs.push_back({j, anchors.angles[j], hi});
  }
  return arcs;
}

// sum_k alpha_k cot((t - theta_k)/2): i times the partial-fraction form of
// P/prod(zeta - zeta_k) on the circle. Strictly decreasing on each arc.
double circle_function(double t, const BoundaryAnchorSet& anchors, const HeightVector& heights) {
  double acc = 0.0;
  for (std::size_t k = 0; k < anchors.size(); ++k) {
    if (heights.alphas[k] > 0.0) acc += heights.alphas[k] / std::tan(0.5 * (t - anchors.angles[k]));
  }
  return acc;
}

double circle_function_deriv(double t, const BoundaryAnchorSet& anchors, const HeightVector& heights) {
  double acc = 0.0;
  for (std::size_t k = 0; k < anchors.size(); ++k) {
    if (heights.alphas[k] > 0.0) {
      const double s = std::sin(0.5 * (t - anchors.angles[k]));
      acc -= 0.5 * heights.alphas[k] / (s * s);
    }
  }
  return acc;
}

// Safeguarded Newton on the circle parameter inside (lo, hi).
double polish_on_arc(double t, const Arc& arc, const BoundaryAnchorSet& anchors, const HeightVector& heights) {
  double lo = arc.lo;
  double hi = arc.hi;
  if (!(t > lo && t < hi)) t = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double h = circle_function(t, anchors, heights);
    if (h == 0.0) return t;
    if (h > 0.0) {
      lo = t;
    } else {
      hi = t;
    }
    double next = t - h / circle_function_deriv(t, anchors, heights);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - t);
    t = next;
    if (step <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t))) break;
  }
  return t;
}

std::size_t previous_active(const std::vector<std::size_t>& active, std::size_t j) {
  const auto it = std::find(active.begin(), active.end(), j);
  const std::size_t pos = static_cast<std::size_t>(it - active.begin());
  return active[(pos + active.size() - 1) % active.size()];
}

}  // namespace

BoundaryAnchorSet BoundaryAnchorSet::make(std::vector<double> angles, std::vector<double> betas) {
  if (angles.empty()) throw InputError("at least one boundary anchor is required");
  for (std::size_t j = 0; j < angles.size(); ++j) {
    const double t = angles[j];
    if (!std::isfinite(t) || t < 0.0 || t >= kTwoPi) throw InputError("anchor angles must lie in [0, 2 pi)");
    if (j > 0 && !(t > angles[j - 1])) throw InputError("anchor angles must be strictly increasing");
  }
  if (!betas.empty()) {
    if (betas.size() != angles.size()) throw InputError("one beta per anchor is required");
    for (double b : betas) {
      if (!std::isfinite(b) || !(b > 0.0)) throw InputError("angular derivatives beta must be positive");
    }
  }
  return BoundaryAnchorSet{std::move(angles), std::move(betas)};
}

HeightVector HeightVector::make(std::vector<double> alphas) {
  if (alphas.empty()) throw InputError("height vector is empty");
  double sum = 0.0;
  for (double a : alphas) {
    if (!std::isfinite(a) || a < 0.0) throw InputError("heights must be nonnegative");
    sum += a;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) throw InputError("heights must sum to 1");
  return HeightVector{std::move(alphas)};
}

std::vector<std::size_t> ExtremalConfig::active() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < heights.size(); ++k) {
    if (heights.alphas[k] > 0.0) out.push_back(k);
  }
  return out;
}

ComplexPoly extremal_polynomial(const BoundaryAnchorSet& anchors, const HeightVector& heights) {
  if (anchors.size() != heights.size()) throw InputError("anchors and heights differ in length");
  std::vector<Complex> points;
  std::vector<double> weights;
  for (std::size_t k = 0; k < anchors.size(); ++k) {
    if (heights.alphas[k] > 0.0) {
      points.push_back(anchors.point(k));
      weights.push_back(heights.alphas[k]);
    }
  }
  ComplexPoly p = poly_from_roots(points);
  for (std::size_t k = 0; k < points.size(); ++k) {
    std::vector<Complex> others;
    for (std::size_t l = 0; l < points.size(); ++l) {
      if (l != k) others.push_back(points[l]);
    }
    const ComplexPoly term = poly_from_roots(others);
    for (std::size_t d = 0; d < term.size(); ++d) p[d] += 2.0 * weights[k] * points[k] * term[d];
  }
  return p;
}

ExtremalConfig solve_deltas(const BoundaryAnchorSet& anchors, const HeightVector& heights) {
  if (anchors.size() != heights.size()) throw InputError("anchors and heights differ in length");
  ExtremalConfig config;
  config.anchors = anchors;
  config.heights = heights;
  config.deltas = anchors.angles;

  const auto active = config.active();
  const auto arcs = active_arcs(anchors, active);
  const ComplexPoly p = extremal_polynomial(anchors, heights);

  std::vector<Complex> guesses;
  for (const auto& arc : arcs) guesses.push_back(std::polar(1.0, 0.5 * (arc.lo + arc.hi)));
  const auto roots = poly_roots(p, guesses);

  std::vector<double> root_angles;
  for (const auto& r : roots) {
    const double dev = std::abs(std::abs(r) - 1.0);
    config.max_root_modulus_deviation = std::max(config.max_root_modulus_deviation, dev);
    if (dev > kCircleTolerance) {
      throw NumericalError("configuration error: a root of P lies off the unit circle");
    }
    root_angles.push_back(lift(std::arg(r), arcs.front().lo - kLabelSlack));
  }
  std::sort(root_angles.begin(), root_angles.end());

  // Exactly one root per arc: the k-th root in angular order belongs to the k-th arc.
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& arc = arcs[i];
    const double t = root_angles[i];
    if (t < arc.lo - kLabelSlack || t > arc.hi + kLabelSlack) {
      throw NumericalError("labeling error: roots of P do not interlace the anchors");
    }
    config.deltas[arc.anchor] = polish_on_arc(t, arc, anchors, heights);
  }
  return config;
}

double ResidueReport::max_residual() const {
  return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
}

ResidueReport residue_check(const ExtremalConfig& config) {
  ResidueReport report;
  const std::size_t n = config.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Complex zj = config.anchors.point(j);
    Complex num = 1.0;
    for (std::size_t k = 0; k < n; ++k) num *= zj - config.zero(k);
    Complex den = zj;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) den *= zj - config.anchors.point(k);
    }
    const Complex rhs = num / den;
    report.residuals.push_back(std::abs(rhs - 2.0 * config.heights.alphas[j]));
    report.rhs_imag.push_back(std::abs(rhs.imag()));
    if (config.heights.alphas[j] > 0.0 && (std::abs(rhs.imag()) >= 1e-10 || !(rhs.real() > 0.0))) {
      report.rhs_real_positive = false;
    }
  }
  return report;
}

double delta_theta_sum(const ExtremalConfig& config) {
  double s = 0.0;
  for (std::size_t k = 0; k < config.size(); ++k) s += config.deltas[k] - config.anchors.angles[k];
  return s;
}

Complex q_eval(const ExtremalConfig& config, Complex point) {
  if (std::abs(point) < kVertexTolerance) throw DomainError("Q has a pole at the origin");
  Complex num = 1.0;
  Complex den = point * point;
  for (std::size_t k : config.active()) {
    const Complex zk = config.anchors.point(k);
    if (std::abs(point - zk) < kVertexTolerance) throw DomainError("Q has a pole at a boundary anchor");
    const Complex a = point - config.zero(k);
    const Complex b = point - zk;
    num *= a * a;
    den *= b * b;
  }
  return config.coefficient_A * num / den;
}

Complex q_sqrt(const ExtremalConfig& config, Complex point) {
  if (std::abs(point) < kVertexTolerance) throw DomainError("Q has a pole at the origin");
  Complex acc = 1.0 / point;
  for (std::size_t k : config.active()) {
    const Complex zk = config.anchors.point(k);
    if (std::abs(point - zk) < kVertexTolerance) throw DomainError("Q has a pole at a boundary anchor");
    acc -= 2.0 * config.heights.alphas[k] / (point - zk);
  }
  return acc / kTwoPi;
}

double critical_direction(const ExtremalConfig& config, std::size_t k) {
  if (config.heights.alphas.at(k) <= 0.0) throw InputError("degenerate digon has no critical trajectory");
  const double delta = config.deltas[k];
  double phi = delta + kPi;
  for (std::size_t l : config.active()) {
    double u = std::fmod(delta - config.anchors.angles[l], kTwoPi);
    if (u <= 0.0) u += kTwoPi;
    phi -= config.heights.alphas[l] * u;
  }
  return CirclePoint::normalize(phi);
}

namespace {

// Phi(zeta) = log zeta - 2 sum_k alpha_k log(zeta - zeta_k). The factors
// log(zeta - zeta_k) = i(theta_k - pi) + Log(1 - zeta/zeta_k) are single valued
// on the closed disk minus zeta_k; log zeta follows the segment from the base
// point, taking the counterclockwise side if that segment meets the origin.
Complex phi_tracked(const ExtremalConfig& config, double base_direction, Complex point) {
  if (std::abs(point) < kVertexTolerance) throw DomainError("strip map path ends at the vertex 0");
  if (std::abs(point) > 1.0 + 1e-12) throw DomainError("strip map is defined on the closed unit disk only");
  const double rel = std::arg(point * std::polar(1.0, -base_direction));
  Complex acc(std::log(std::abs(point)), base_direction + rel);
  for (std::size_t k : config.active()) {
    const Complex zk = config.anchors.point(k);
    if (std::abs(point - zk) < kVertexTolerance) throw DomainError("strip map path ends at a boundary vertex");
    const Complex log_factor = Complex(0.0, config.anchors.angles[k] - kPi) + std::log(1.0 - point / zk);
    acc -= 2.0 * config.heights.alphas[k] * log_factor;
  }
  return acc;
}

}  // namespace

StripMap make_strip_map(const ExtremalConfig& config, std::size_t j) {
  if (j >= config.size()) throw InputError("strip map index out of range");
  if (!(config.heights.alphas[j] > 0.0)) throw InputError("degenerate digon has no strip map");
  const auto active = config.active();
  const std::size_t prev = previous_active(active, j);
  const double alpha = config.heights.alphas[j];

  StripMap strip;
  strip.config = config;
  strip.index = j;
  strip.base_direction = CirclePoint::normalize(critical_direction(config, prev) + kPi * alpha);

  // A point of the boundary arc between e^{i delta_prev} and zeta_j.
  const double theta = config.anchors.angles[j];
  double left = config.deltas[prev];
  while (left > theta) left -= kTwoPi;
  const Complex arc_point = std::polar(1.0, 0.5 * (left + theta));
  const Complex phi = phi_tracked(config, strip.base_direction, arc_point);
  strip.kappa = CirclePoint::normalize(-phi.imag() / alpha);
  return strip;
}

Complex strip_map_eval(const StripMap& strip, Complex point) {
  const double alpha = strip.config.heights.alphas[strip.index];
  const Complex phi = phi_tracked(strip.config, strip.base_direction, point);
  return std::exp(Complex(0.0, strip.kappa) + phi / alpha);
}

Complex strip_map_log_derivative(const StripMap& strip, Complex point) {
  const double alpha = strip.config.heights.alphas[strip.index];
  return kTwoPi * q_sqrt(strip.config, point) / alpha;
}

nlohmann::json config_to_json(const ExtremalConfig& config) {
  nlohmann::json j;
  j["theta"] = config.anchors.angles;
  j["alpha"] = config.heights.alphas;
  j["delta"] = config.deltas;
  j["A"] = config.coefficient_A;
  j["residuals"] = residue_check(config).residuals;
  if (config.anchors.has_betas()) j["beta"] = config.anchors.betas;
  return j;
}

ExtremalConfig config_from_json(const nlohmann::json& j) {
  auto numbers = [&j](const char* key, bool required) -> std::vector<double> {
    if (!j.contains(key)) {
      if (required) throw InputError(std::string("config is missing \"") + key + "\"");
      return {};
    }
    if (!j[key].is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
    std::vector<double> out;
    for (const auto& v : j[key]) {
      if (!v.is_number()) throw InputError(std::string("\"") + key + "\" must hold numbers");
      out.push_back(v.get<double>());
    }
    return out;
  };
  if (!j.is_object()) throw InputError("config must be a JSON object");
  auto anchors = BoundaryAnchorSet::make(numbers("theta", true), numbers("beta", false));
  auto heights = HeightVector::make(numbers("alpha", true));
  auto config = solve_deltas(anchors, heights);
  const auto stored = numbers("delta", false);
  if (!stored.empty()) {
    if (stored.size() != config.deltas.size()) throw InputError("stored delta has the wrong length");
    for (std::size_t k = 0; k < stored.size(); ++k) {
      if (std::abs(stored[k] - config.deltas[k]) > 1e-9) {
        throw InputError("stored delta disagrees with the solved configuration");
      }
    }
  }
  return config;
}

}  // namespace digon
