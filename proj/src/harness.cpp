#include "digon/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "digon/angular.hpp"
#include "digon/extremal_map.hpp"
#include "digon/map_json.hpp"

namespace digon {

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::AutomorphismFixingAnchors: return "automorphism_fixing_anchors";
    case FamilyKind::PickConjugate: return "pick_conjugate";
    case FamilyKind::OdeExtremal: return "ode_extremal";
    case FamilyKind::Composition: return "composition";
    case FamilyKind::NonunivalentSquare: return "nonunivalent_square";
  }
  return "unknown";
}

FamilyKind family_from_string(const std::string& s) {
  for (auto k : {FamilyKind::AutomorphismFixingAnchors, FamilyKind::PickConjugate, FamilyKind::OdeExtremal,
                 FamilyKind::Composition, FamilyKind::NonunivalentSquare}) {
    if (to_string(k) == s) return k;
  }
  throw InputError("unknown family kind \"" + s + "\"");
}

std::string to_string(Context context) {
  switch (context) {
    case Context::TheoremA: return "theorem_a";
    case Context::Origin: return "origin";
    case Context::General: return "general";
  }
  return "unknown";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Ok: return "ok";
    case Verdict::Equality: return "equality";
    case Verdict::Violation: return "violation";
    case Verdict::Inadmissible: return "inadmissible";
    case Verdict::WitnessConfirmed: return "non-univalent witness confirmed";
    case Verdict::WitnessNotConfirmed: return "non-univalent witness not confirmed";
  }
  return "unknown";
}

namespace {

double param(const nlohmann::json& p, const char* key, double fallback) {
  if (!p.contains(key)) return fallback;
  if (!p[key].is_number()) throw InputError(std::string("family parameter \"") + key + "\" must be a number");
  return p[key].get<double>();
}

// Hyperbolic (or identity when lambda = 1) automorphism with boundary fixed
// points z1, z2 and f'(z1) = lambda, f'(z2) = 1/lambda.
MapExpr hyperbolic_automorphism(Complex z1, Complex z2, double lambda) {
  const Complex p = z1 - lambda * z2;
  const Complex q = z1 * z2 * (lambda - 1.0);
  const Complex s = lambda * z1 - z2;
  return MapExpr::automorphism(DiskPoint{-q / p}, std::arg(p / s));
}

MapExpr conjugate_by_rotation(const MapExpr& inner, double theta) {
  if (theta == 0.0) return inner;
  return MapExpr::compose({MapExpr::rotation(-theta), inner, MapExpr::rotation(theta)});
}

// B_w^{-1} o p_alpha o B_z and its angular derivative at 1.
std::pair<MapExpr, double> pick_member(Complex z, Complex w, double alpha) {
  const auto map = MapExpr::compose({MapExpr::moebius(DiskPoint{z}), MapExpr::pick(alpha),
                                     MapExpr::moebius(DiskPoint{w}).inverse()});
  const double beta =
      (1.0 - std::norm(z)) / std::norm(1.0 - z) / std::sqrt(alpha) * std::norm(1.0 - w) / (1.0 - std::norm(w));
  return {map, beta};
}

std::vector<double> random_angles(Rng& rng, std::size_t n) {
  // Jittered equispaced angles keep anchors well separated.
  const double offset = rng.uniform(0.0, kTwoPi);
  std::vector<double> out;
  for (std::size_t k = 0; k < n; ++k) {
    const double jitter = rng.uniform(-0.3, 0.3) * kPi / static_cast<double>(n);
    out.push_back(CirclePoint::normalize(offset + kTwoPi * static_cast<double>(k) / static_cast<double>(n) + jitter));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> random_heights(Rng& rng, std::size_t n, double floor) {
  std::vector<double> raw;
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    raw.push_back(rng.uniform(floor, 1.0));
    sum += raw.back();
  }
  for (auto& a : raw) a /= sum;
  return raw;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::vector<GeneratedCase> gen_automorphism(const FamilySpec& spec, Rng& rng) {
  const auto& p = spec.params;
  const bool fixed_c = p.contains("c");
  const double c_fixed = param(p, "c", 0.0);
  const double c_max = param(p, "c_max", 0.9);
  if (!(std::abs(c_fixed) < 0.95) || !(c_max > 0.0 && c_max < 0.95)) {
    throw InputError("automorphism parameter c must lie in (-0.95, 0.95)");
  }
  std::vector<double> given;
  if (p.contains("anchors")) given = p["anchors"].get<std::vector<double>>();
  const int n_random = static_cast<int>(param(p, "n", 1));
  const std::size_t n = given.empty() ? static_cast<std::size_t>(n_random) : given.size();
  if (n < 1) throw InputError("at least one anchor is required");
  if (n >= 3 && !(fixed_c && c_fixed == 0.0)) {
    throw InputError("an automorphism fixing three or more boundary points is the identity; use c = 0");
  }

  std::vector<GeneratedCase> out;
  for (int i = 0; i < spec.count; ++i) {
    const std::vector<double> anchors =
        given.empty() ? random_angles(rng, n) : BoundaryAnchorSet::make(given).angles;
    const double c = fixed_c ? c_fixed : rng.uniform(-c_max, c_max);
    const double lambda = (1.0 - c) / (1.0 + c);
    const Complex z1 = std::polar(1.0, anchors[0]);
    const Complex z2 = n >= 2 ? std::polar(1.0, anchors[1]) : -z1;

    GeneratedCase g;
    g.family = to_string(spec.kind);
    g.map = hyperbolic_automorphism(z1, z2, lambda);
    g.label = "automorphism(c=" + fmt(c) + ")";
    g.inputs.anchors = anchors;
    g.inputs.z = rng.in_disk(0.8);
    if (n == 1) {
      g.inputs.context = Context::TheoremA;
      g.inputs.betas = {lambda};
      g.inputs.alphas = {1.0};
    } else {
      g.inputs.context = Context::General;
      g.inputs.betas.assign(n, 1.0);
      g.inputs.betas[0] = lambda;
      g.inputs.betas[1] = 1.0 / lambda;
      g.inputs.alphas = random_heights(rng, n, 0.05);
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GeneratedCase> gen_pick(const FamilySpec& spec, Rng& rng) {
  const auto& p = spec.params;
  const bool fixed_alpha = p.contains("alpha");
  const double alpha_fixed = param(p, "alpha", 1.0);
  const double alpha_min = param(p, "alpha_min", 0.05);
  const double alpha_max = param(p, "alpha_max", 1.0);
  const double radius = param(p, "radius", 0.8);
  const std::string center = p.value("center", std::string("random"));
  if (center != "random" && center != "origin") throw InputError("center must be \"random\" or \"origin\"");
  if (!(alpha_fixed > 0.0 && alpha_fixed <= 1.0) || !(alpha_min > 0.0 && alpha_min <= alpha_max && alpha_max <= 1.0)) {
    throw InputError("Pick parameter alpha must lie in (0, 1]");
  }
  if (!(radius >= 0.0 && radius < 0.95)) throw InputError("radius must lie in [0, 0.95)");
  const std::vector<double> given = p.contains("anchors") ? p["anchors"].get<std::vector<double>>() : std::vector<double>{};
  if (given.size() > 1) throw InputError("Pick conjugates fix a single anchor");

  std::vector<GeneratedCase> out;
  for (int i = 0; i < spec.count; ++i) {
    const double theta = given.empty() ? (center == "origin" ? 0.0 : rng.uniform(0.0, kTwoPi)) : CirclePoint::normalize(given[0]);
    const double alpha = fixed_alpha ? alpha_fixed : rng.uniform(alpha_min, alpha_max);
    const Complex z = center == "origin" ? Complex(0.0) : rng.in_disk(radius);
    const Complex w = center == "origin" ? Complex(0.0) : rng.in_disk(radius);
    auto [inner, beta] = pick_member(z, w, alpha);

    GeneratedCase g;
    g.family = to_string(spec.kind);
    g.map = conjugate_by_rotation(inner, theta);
    g.label = "pick_conjugate(alpha=" + fmt(alpha) + ")";
    g.inputs.anchors = {theta};
    g.inputs.betas = {beta};
    g.inputs.alphas = {1.0};
    g.inputs.z = std::polar(1.0, theta) * z;
    g.inputs.context = center == "origin" ? Context::Origin : Context::TheoremA;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GeneratedCase> gen_composition(const FamilySpec& spec, Rng& rng) {
  const auto& p = spec.params;
  const int length_max = static_cast<int>(param(p, "length_max", 3));
  const double radius = param(p, "radius", 0.8);
  if (length_max < 2 || length_max > 4) throw InputError("length_max must lie in 2..4");
  if (!(radius >= 0.0 && radius < 0.95)) throw InputError("radius must lie in [0, 0.95)");

  std::vector<GeneratedCase> out;
  for (int i = 0; i < spec.count; ++i) {
    const double theta = rng.uniform(0.0, kTwoPi);
    const int length = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(length_max - 1)));
    std::vector<MapExpr> members;
    double beta = 1.0;
    std::string label = "composition(";
    for (int k = 0; k < length; ++k) {
      if (rng.uniform() < 0.5) {
        const double c = rng.uniform(-0.9, 0.9);
        members.push_back(hyperbolic_automorphism(1.0, -1.0, (1.0 - c) / (1.0 + c)));
        beta *= (1.0 - c) / (1.0 + c);
        label += (k ? "," : "") + std::string("T");
      } else {
        auto [m, b] = pick_member(rng.in_disk(0.6), rng.in_disk(0.6), rng.uniform(0.1, 1.0));
        members.push_back(m);
        beta *= b;
        label += (k ? "," : "") + std::string("P");
      }
    }
    GeneratedCase g;
    g.family = to_string(spec.kind);
    g.map = conjugate_by_rotation(MapExpr::compose(members), theta);
    g.label = label + ")";
    g.inputs.context = Context::TheoremA;
    g.inputs.anchors = {theta};
    g.inputs.betas = {beta};
    g.inputs.alphas = {1.0};
    g.inputs.z = rng.in_disk(radius);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GeneratedCase> gen_ode(const FamilySpec& spec, Rng& rng) {
  const auto& p = spec.params;
  const int n_max = static_cast<int>(param(p, "n_max", 3));
  const double c_min = param(p, "c_min", 0.3);
  const double c_max = param(p, "c_max", 0.9);
  if (n_max < 1 || n_max > 4) throw InputError("n_max must lie in 1..4");
  if (!(c_min > 0.0 && c_min <= c_max && c_max <= 1.0)) throw InputError("slope range must lie in (0, 1]");

  std::vector<GeneratedCase> out;
  for (int i = 0; i < spec.count; ++i) {
    const std::size_t n = 1 + rng.below(static_cast<std::uint64_t>(n_max));
    const auto angles = random_angles(rng, n);
    const auto heights = random_heights(rng, n, 0.3);
    const double c = rng.uniform(c_min, c_max);
    const auto config = solve_deltas(BoundaryAnchorSet::make(angles), HeightVector{heights});

    GeneratedCase g;
    g.family = to_string(spec.kind);
    g.map = OdeMember{config, c};
    g.label = "ode_extremal(n=" + std::to_string(n) + ",c=" + fmt(c) + ")";
    g.inputs.context = Context::Origin;
    g.inputs.anchors = angles;
    g.inputs.alphas = heights;
    for (double a : heights) g.inputs.betas.push_back(std::pow(c, -1.0 / (2.0 * a)));
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<GeneratedCase> gen_square(const FamilySpec& spec) {
  std::vector<GeneratedCase> out;
  for (int i = 0; i < spec.count; ++i) {
    GeneratedCase g;
    g.family = to_string(spec.kind);
    g.map = MapExpr::square();
    g.label = "square";
    g.inputs.context = Context::Origin;
    g.inputs.anchors = {0.0};
    g.inputs.betas = {2.0};
    g.inputs.alphas = {1.0};
    g.witness = true;
    out.push_back(std::move(g));
  }
  return out;
}

const std::vector<Complex>& julia_samples() {
  static const std::vector<Complex> samples{{0.0, 0.0},  {0.5, 0.0},   {-0.7, 0.0}, {0.3, 0.6},
                                            {-0.2, -0.8}, {0.9, 0.1}, {0.05, 0.95}};
  return samples;
}

// (RHS - LHS)/RHS of Julia's inequality at the anchor.
double julia_relative(Complex anchor, double beta, Complex z, Complex w) {
  const double lhs = std::norm(anchor - w) / (1.0 - std::norm(w));
  const double rhs = beta * std::norm(anchor - z) / (1.0 - std::norm(z));
  return (rhs - lhs) / rhs;
}

struct Measured {
  std::vector<double> betas;
  double julia_min = std::numeric_limits<double>::infinity();
  std::string failure;
};

Measured measure_expr(const MapExpr& map, const BoundInputs& in, const Tolerances& tol) {
  Measured m;
  for (std::size_t k = 0; k < in.anchors.size(); ++k) {
    const CirclePoint at{in.anchors[k]};
    try {
      const auto limit = angular_limit(map, at);
      if (std::abs(limit.value - at.value()) > 1e-8) {
        m.failure = "anchor " + std::to_string(k) + " is not fixed";
        return m;
      }
      const auto d = angular_derivative(map, at, at.value());
      const double beta = d.value.real();
      if (d.flagged || std::abs(d.value.imag()) > tol.admissibility * std::max(1.0, beta) ||
          std::abs(beta - in.betas[k]) > tol.admissibility * std::max(1.0, in.betas[k])) {
        m.failure = "measured angular derivative " + fmt(beta) + " at anchor " + std::to_string(k) +
                    " disagrees with the generator value " + fmt(in.betas[k]);
        return m;
      }
      m.betas.push_back(beta);
    } catch (const NumericalError& e) {
      m.failure = std::string("anchor measurement failed: ") + e.what();
      return m;
    }
  }
  for (std::size_t k = 0; k < in.anchors.size(); ++k) {
    const Complex anchor = std::polar(1.0, in.anchors[k]);
    for (const auto& z : julia_samples()) {
      m.julia_min = std::min(m.julia_min, julia_relative(anchor, m.betas[k], z, map.eval(z)));
    }
  }
  return m;
}

Measured measure_ode(const OdeMember& member, const BoundInputs& in, const Tolerances& tol) {
  Measured m;
  try {
    const auto sampled = integrate_extremal_ode(member.config, member.c, anchor_ray_angles(member.config),
                                                level_radius(16));
    if (sampled.max_qd_residual() > 1e-8) {
      m.failure = "quadratic-differential transport residual too large";
      return m;
    }
    for (std::size_t k = 0; k < in.anchors.size(); ++k) {
      const double beta = measure_beta(sampled, k).value.real();
      // The slope family is checked against its closed form more loosely than
      // closed-form maps: the boundary quotient carries the integration error.
      if (std::abs(beta - in.betas[k]) > 1e2 * tol.admissibility * in.betas[k]) {
        m.failure = "measured angular derivative at anchor " + std::to_string(k) + " disagrees with the generator";
        return m;
      }
      m.betas.push_back(beta);
    }
    for (std::size_t k = 0; k < in.anchors.size(); ++k) {
      const Complex anchor = std::polar(1.0, in.anchors[k]);
      for (const auto& ray : sampled.rays) {
        for (std::size_t i = 0; i < ray.samples.size(); i += 8) {
          const auto& s = ray.samples[i];
          if (s.r > 0.99) continue;
          m.julia_min = std::min(m.julia_min, julia_relative(anchor, m.betas[k], s.zeta, s.w));
        }
      }
    }
  } catch (const Error& e) {
    m.failure = std::string("integration failed: ") + e.what();
  }
  return m;
}

}  // namespace

std::vector<GeneratedCase> generate_family(const FamilySpec& spec) {
  if (spec.count < 0) throw InputError("family count must be nonnegative");
  Rng rng(spec.seed);
  switch (spec.kind) {
    case FamilyKind::AutomorphismFixingAnchors: return gen_automorphism(spec, rng);
    case FamilyKind::PickConjugate: return gen_pick(spec, rng);
    case FamilyKind::Composition: return gen_composition(spec, rng);
    case FamilyKind::OdeExtremal: return gen_ode(spec, rng);
    case FamilyKind::NonunivalentSquare: return gen_square(spec);
  }
  return {};
}

CheckResult verify_bound(const GeneratedCase& c, const Tolerances& tol) {
  const auto& in = c.inputs;
  if (in.anchors.size() != in.betas.size() || in.anchors.size() != in.alphas.size() || in.anchors.empty()) {
    throw InputError("bound inputs need one beta and one height per anchor");
  }
  CheckResult r;
  r.family = c.family;
  r.map = c.label;
  r.context = in.context;
  r.z = in.z;
  r.anchors = in.anchors;
  r.alphas = in.alphas;

  Measured m;
  if (const auto* map = std::get_if<MapExpr>(&c.map)) {
    if (!c.witness && !map->is_univalent()) {
      r.verdict = Verdict::Inadmissible;
      r.reason = "map is not univalent";
      return r;
    }
    r.w = map->eval(in.z);
    r.actual = std::abs(map->deriv(in.z));
    r.map = describe(*map);
    m = measure_expr(*map, in, tol);
  } else {
    const auto& member = std::get<OdeMember>(c.map);
    r.z = 0.0;
    r.w = 0.0;
    r.actual = member.c;
    m = measure_ode(member, in, tol);
  }
  r.betas = m.betas;
  r.julia_min_slack = m.julia_min;
  if (!m.failure.empty()) {
    r.verdict = Verdict::Inadmissible;
    r.reason = m.failure;
    return r;
  }
  if (!c.witness && m.julia_min < -tol.violation) {
    r.verdict = Verdict::Inadmissible;
    r.reason = "Julia's inequality fails at a sample point";
    return r;
  }

  try {
    switch (in.context) {
      case Context::TheoremA: {
        const Complex rot = std::polar(1.0, -in.anchors[0]);
        r.bound_as_printed = bound_theorem_a(in.z * rot, r.w * rot, r.betas[0], Variant::AsPrinted);
        r.bound_derived = bound_theorem_a(in.z * rot, r.w * rot, r.betas[0], Variant::DerivedConsistent);
        break;
      }
      case Context::Origin: {
        if (std::abs(r.w) > 1e-12 || std::abs(in.z) != 0.0) {
          r.verdict = Verdict::Inadmissible;
          r.reason = "origin context needs a map fixing 0";
          return r;
        }
        const HeightVector heights{in.alphas};
        r.bound_as_printed = r.bound_derived = bound_origin(r.betas, heights);
        break;
      }
      case Context::General: {
        const auto anchors = BoundaryAnchorSet::make(in.anchors, r.betas);
        const HeightVector heights{in.alphas};
        r.bound_as_printed = bound_general(in.z, r.w, anchors, heights, Variant::AsPrinted);
        r.bound_derived = bound_general(in.z, r.w, anchors, heights, Variant::DerivedConsistent);
        break;
      }
    }
  } catch (const Error& e) {
    r.verdict = Verdict::Inadmissible;
    r.reason = std::string("bound inputs rejected: ") + e.what();
    return r;
  }
  r.slack_as_printed = r.actual - r.bound_as_printed;
  r.slack_derived = r.actual - r.bound_derived;

  const bool below = r.slack_derived < -tol.violation * std::max(1.0, r.bound_derived);
  if (c.witness) {
    r.verdict = below ? Verdict::WitnessConfirmed : Verdict::WitnessNotConfirmed;
  } else if (below) {
    r.verdict = Verdict::Violation;
  } else if (std::abs(r.slack_derived) <= tol.equality * r.bound_derived) {
    r.verdict = Verdict::Equality;
  } else {
    r.verdict = Verdict::Ok;
  }
  return r;
}

nlohmann::json check_to_json(const CheckResult& r) {
  nlohmann::json j;
  j["index"] = r.index;
  j["family"] = r.family;
  j["map"] = r.map;
  j["context"] = to_string(r.context);
  j["z"] = complex_to_json(r.z);
  j["w"] = complex_to_json(r.w);
  j["anchors"] = r.anchors;
  j["beta"] = r.betas;
  j["alpha"] = r.alphas;
  j["actual"] = r.actual;
  j["bound"] = {{"as_printed", r.bound_as_printed}, {"derived_consistent", r.bound_derived}};
  j["slack"] = {{"as_printed", r.slack_as_printed}, {"derived_consistent", r.slack_derived}};
  if (std::isfinite(r.julia_min_slack)) j["julia_min_slack"] = r.julia_min_slack;
  j["verdict"] = to_string(r.verdict);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

SuiteConfig default_suite(std::uint64_t seed, int cases) {
  if (cases < 0) throw InputError("case count must be nonnegative");
  SuiteConfig s;
  s.seed = seed;
  const int ode = cases >= 20 ? std::clamp(cases / 100, 1, 10) : 0;
  const int rest = cases - ode;
  const int auto1 = rest * 3 / 10;
  const int auto2 = rest * 2 / 10;
  const int comp = rest * 15 / 100;
  const int pick = rest - auto1 - auto2 - comp;
  s.families = {
      {FamilyKind::AutomorphismFixingAnchors, auto1, {{"n", 1}}, 0},
      {FamilyKind::AutomorphismFixingAnchors, auto2, {{"n", 2}}, 0},
      {FamilyKind::PickConjugate, pick, nlohmann::json::object(), 0},
      {FamilyKind::Composition, comp, nlohmann::json::object(), 0},
      {FamilyKind::OdeExtremal, ode, nlohmann::json::object(), 0},
      {FamilyKind::NonunivalentSquare, 1, nlohmann::json::object(), 0},
  };
  return s;
}

SuiteConfig suite_from_json(const nlohmann::json& j) {
  try {
    SuiteConfig s;
    s.seed = j.value("seed", std::uint64_t{7});
    if (!j.contains("families") || !j["families"].is_array()) throw InputError("suite needs a \"families\" array");
    for (const auto& f : j["families"]) {
      FamilySpec spec;
      spec.kind = family_from_string(f.at("kind").get<std::string>());
      spec.count = f.value("count", 1);
      spec.params = f.value("params", nlohmann::json::object());
      s.families.push_back(spec);
    }
    if (j.contains("tolerances")) {
      const auto& t = j["tolerances"];
      s.tolerances.violation = t.value("violation", s.tolerances.violation);
      s.tolerances.equality = t.value("equality", s.tolerances.equality);
      s.tolerances.admissibility = t.value("admissibility", s.tolerances.admissibility);
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed suite description: ") + e.what());
  }
}

nlohmann::json suite_to_json(const SuiteConfig& s) {
  nlohmann::json families = nlohmann::json::array();
  for (const auto& f : s.families) {
    families.push_back({{"kind", to_string(f.kind)}, {"count", f.count}, {"params", f.params}});
  }
  return {{"seed", s.seed},
          {"families", families},
          {"tolerances",
           {{"violation", s.tolerances.violation},
            {"equality", s.tolerances.equality},
            {"admissibility", s.tolerances.admissibility}}}};
}

SuiteReport run_suite(const SuiteConfig& config) {
  SuiteReport report;
  report.config = config;
  for (std::size_t f = 0; f < config.families.size(); ++f) {
    FamilySpec spec = config.families[f];
    Rng mixer(config.seed ^ (0x9e3779b97f4a7c15ULL * (f + 1)));
    spec.seed = mixer.next_u64();
    for (const auto& c : generate_family(spec)) {
      auto r = verify_bound(c, config.tolerances);
      r.index = report.results.size();
      auto& s = report.summary;
      ++s.total;
      switch (r.verdict) {
        case Verdict::Ok: ++s.ok; break;
        case Verdict::Equality: ++s.equality; break;
        case Verdict::Violation: ++s.violations; break;
        case Verdict::Inadmissible: ++s.inadmissible; break;
        case Verdict::WitnessConfirmed: ++s.witness_confirmed; break;
        case Verdict::WitnessNotConfirmed: ++s.witness_not_confirmed; break;
      }
      report.results.push_back(std::move(r));
    }
  }
  report.audit = audit_variants(config.seed);
  return report;
}

nlohmann::json report_to_json(const SuiteReport& report) {
  const auto& s = report.summary;
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& r : report.results) cases.push_back(check_to_json(r));
  return {{"config", suite_to_json(report.config)},
          {"variant_operative", to_string(report.audit.operative())},
          {"summary",
           {{"total", s.total},
            {"ok", s.ok},
            {"equality", s.equality},
            {"violations", s.violations},
            {"inadmissible", s.inadmissible},
            {"witness_confirmed", s.witness_confirmed},
            {"witness_not_confirmed", s.witness_not_confirmed}}},
          {"audit", audit_to_json(report.audit)},
          {"cases", cases}};
}

}  // namespace digon
