#include "digon/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "digon/conformal_maps.hpp"

namespace digon {

namespace {

void check_disk(Complex z, const char* name) {
  if (!(std::abs(z) < 1.0)) throw DomainError(std::string(name) + " must lie in the unit disk");
}

void check_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta must be positive");
}

// log prod_j beta_j^{2 alpha_j^2}
double log_beta_weight(std::span<const double> betas, const HeightVector& heights) {
  if (betas.size() != heights.size()) throw InputError("one beta per height is required");
  double acc = 0.0;
  for (std::size_t j = 0; j < betas.size(); ++j) {
    check_beta(betas[j]);
    acc += 2.0 * heights.alphas[j] * heights.alphas[j] * std::log(betas[j]);
  }
  return acc;
}

Complex moved(Complex zeta, Complex z) { return (zeta - z) / (1.0 - zeta * std::conj(z)); }

}  // namespace

double bound_theorem_a(Complex z, Complex w, double beta, Variant variant) {
  check_disk(z, "z");
  check_disk(w, "w");
  check_beta(beta);
  const double dz = 1.0 - std::norm(z);
  const double dw = 1.0 - std::norm(w);
  const double az = std::norm(1.0 - z);  // |1 - z|^2
  const double aw = std::norm(1.0 - w);
  const double ratio = (aw * aw) / (az * az) / (beta * beta);
  if (variant == Variant::AsPrinted) return ratio * (dz * dz * dz) / (dw * dw * dw);
  return ratio * dz / dw;
}

double alpha_star_relation(Complex z, Complex w, double beta) {
  check_disk(z, "z");
  check_disk(w, "w");
  check_beta(beta);
  const double dz = 1.0 - std::norm(z);
  const double dw = 1.0 - std::norm(w);
  const double az = std::norm(1.0 - z);
  const double aw = std::norm(1.0 - w);
  double alpha = (aw * aw) * (dz * dz) / ((az * az) * (dw * dw) * beta * beta);
  // Round-off at the automorphism end of the family.
  if (alpha > 1.0 && alpha <= 1.0 + 1e-12) alpha = 1.0;
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("no admissible extremal: (z, w, beta) gives alpha outside (0, 1]");
  }
  return alpha;
}

double bound_origin(std::span<const double> betas, const HeightVector& heights) {
  for (double b : betas) {
    if (!(b >= 1.0)) throw DomainError("maps fixing 0 have angular derivatives beta_j >= 1");
  }
  return std::exp(-log_beta_weight(betas, heights));
}

HeightVector optimal_alpha(std::span<const double> betas) {
  if (betas.empty()) throw InputError("at least one beta is required");
  double inv_sum = 0.0;
  for (double b : betas) {
    if (!(b > 1.0) || !std::isfinite(b)) throw DomainError("degenerate anchor: optimal heights need every beta_j > 1");
    inv_sum += 1.0 / std::log(b);
  }
  std::vector<double> alphas;
  for (double b : betas) alphas.push_back(1.0 / (std::log(b) * inv_sum));
  return HeightVector{std::move(alphas)};
}

double corollary_check(std::span<const double> betas, double phi_prime_0) {
  if (betas.empty()) throw InputError("at least one beta is required");
  if (!(phi_prime_0 > 0.0 && phi_prime_0 <= 1.0)) throw DomainError("phi'(0) must lie in (0, 1]");
  double lhs = 0.0;
  for (double b : betas) {
    if (!(b > 1.0) || !std::isfinite(b)) throw DomainError("corollary needs every beta_j > 1");
    lhs += 1.0 / std::log(b);
  }
  if (phi_prime_0 == 1.0) return std::numeric_limits<double>::infinity();
  return -2.0 / std::log(phi_prime_0) - lhs;
}

double printed_f(const BoundaryAnchorSet& anchors, const HeightVector& heights, std::size_t j, Complex z) {
  check_disk(z, "z");
  const double aj = heights.alphas.at(j);
  if (aj == 0.0) return 1.0;
  const Complex zj = anchors.point(j);
  double log_product = 0.0;
  for (std::size_t k = 0; k < anchors.size(); ++k) {
    if (k != j && heights.alphas[k] > 0.0) {
      log_product += heights.alphas[k] * std::log(std::abs(moved(zj, z) - moved(anchors.point(k), z)));
    }
  }
  const double log_f = aj * (2.0 * aj + 1.0) * std::log(1.0 - std::norm(z)) -
                       4.0 * aj * aj * std::log(std::abs(1.0 - zj * std::conj(z))) + 2.0 * aj * log_product;
  return std::exp(log_f);
}

double bound_general(Complex z, Complex w, const BoundaryAnchorSet& anchors, const HeightVector& heights,
                     Variant variant) {
  check_disk(z, "z");
  check_disk(w, "w");
  if (!anchors.has_betas()) throw InputError("general bound needs beta at every anchor");
  if (anchors.size() != heights.size()) throw InputError("anchors and heights differ in length");
  const double log_weight = log_beta_weight(anchors.betas, heights);

  double log_factor = 0.0;
  for (std::size_t j = 0; j < anchors.size(); ++j) {
    const double aj = heights.alphas[j];
    if (aj == 0.0) continue;
    if (variant == Variant::AsPrinted) {
      log_factor += std::log(printed_f(anchors, heights, j, z)) - std::log(printed_f(anchors, heights, j, w));
    } else {
      const double mw = reduced_modulus_general(anchors, heights, w, j, Variant::DerivedConsistent);
      const double mz = reduced_modulus_general(anchors, heights, z, j, Variant::DerivedConsistent);
      log_factor += kTwoPi * aj * aj * (mw - mz);
    }
  }
  return std::exp(log_factor - log_weight);
}

nlohmann::json report_to_json(const BoundReport& report) {
  nlohmann::json j;
  j["bound"] = {{"as_printed", report.as_printed}, {"derived_consistent", report.derived_consistent}};
  j["variant_operative"] = to_string(report.operative);
  if (report.actual) j["actual"] = *report.actual;
  if (report.slack) j["slack"] = *report.slack;
  return j;
}

Variant AuditVerdict::operative() const {
  if (as_printed.passed && !derived_consistent.passed) return Variant::AsPrinted;
  return Variant::DerivedConsistent;
}

namespace {

class AuditRecorder {
 public:
  explicit AuditRecorder(Variant v) { audit_.variant = v; }

  void record(AuditCase c) {
    ++audit_.cases;
    if (!c.passed) {
      ++audit_.failures;
      audit_.passed = false;
      if (!audit_.first_failure) audit_.first_failure = std::move(c);
    }
  }

  VariantAudit result() const { return audit_; }

 private:
  VariantAudit audit_;
};

std::string fmt_complex(Complex z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

VariantAudit audit_one(Variant variant, std::uint64_t seed) {
  AuditRecorder rec(variant);
  Rng rng(seed);

  // Automorphisms T_c(zeta) = (zeta + c)/(1 + c zeta) fix 1 with T'(1) = (1-c)/(1+c)
  // and attain equality at every z.
  for (double c : {0.5, -0.5, 0.25, -0.25, 0.8, -0.8}) {
    const auto map = MapExpr::automorphism(DiskPoint{-c, 0.0}, 0.0);
    const double beta = (1.0 - c) / (1.0 + c);
    for (int i = 0; i < 21; ++i) {
      const Complex z = i == 0 ? Complex(0.0) : rng.in_disk(0.9);
      const Complex w = map.eval(z);
      const double actual = std::abs(map.deriv(z));
      const double bound = bound_theorem_a(z, w, beta, variant);
      std::ostringstream os;
      os << "T_c with c=" << c << " at z=" << fmt_complex(z);
      rec.record({"automorphism_equality", os.str(), bound, actual, std::abs(actual - bound) <= 1e-9});
    }
    // Radially toward the anchor the bound must approach beta.
    const Complex z(1.0 - 1e-6, 0.0);
    const double bound = bound_theorem_a(z, map.eval(z), beta, variant);
    std::ostringstream os;
    os << "T_c with c=" << c << " at 1-|z|=1e-6";
    rec.record({"radial_limit", os.str(), bound, beta, std::abs(bound / beta - 1.0) < 1e-3});
  }

  // n = 1 general-position bound with the anchor at 1 reduces to the one-point bound.
  const auto anchor_one = BoundaryAnchorSet::make({0.0});
  const auto unit_height = HeightVector::make({1.0});
  for (int i = 0; i < 20; ++i) {
    const Complex z = rng.in_disk(0.9);
    const Complex w = rng.in_disk(0.9);
    const double beta = rng.uniform(0.2, 5.0);
    auto anchors = anchor_one;
    anchors.betas = {beta};
    const double general = bound_general(z, w, anchors, unit_height, variant);
    const double single = bound_theorem_a(z, w, beta, variant);
    rec.record({"reduction_n1", "z=" + fmt_complex(z) + " w=" + fmt_complex(w), general, single,
                std::abs(general - single) <= 1e-12 * std::max(1.0, single)});
  }

  // z = w = 0 reduces to the origin bound.
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = 1 + rng.below(4);
    std::vector<double> angles;
    for (std::size_t k = 0; k < n; ++k) angles.push_back(kTwoPi * (static_cast<double>(k) + rng.uniform(0.1, 0.9)) / static_cast<double>(n));
    std::vector<double> raw;
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      raw.push_back(rng.uniform(0.05, 1.0));
      s += raw.back();
    }
    for (auto& a : raw) a /= s;
    std::vector<double> betas;
    for (std::size_t k = 0; k < n; ++k) betas.push_back(rng.uniform(1.0, 4.0));
    const auto anchors = BoundaryAnchorSet::make(angles, betas);
    const HeightVector heights{raw};
    const double general = bound_general(0.0, 0.0, anchors, heights, variant);
    const double origin = bound_origin(betas, heights);
    rec.record({"reduction_origin", "n=" + std::to_string(n), general, origin,
                std::abs(general - origin) <= 1e-12 * std::max(1.0, origin)});
  }

  // Extremal value: |phi*'(z)| of B_w^{-1} o p_alpha o B_z must equal the bound.
  for (int i = 0; i < 20; ++i) {
    const Complex z = rng.in_disk(0.8);
    const Complex w = rng.in_disk(0.8);
    const double alpha = rng.uniform(0.05, 1.0);
    const auto map = MapExpr::compose({MapExpr::moebius(DiskPoint{z}), MapExpr::pick(alpha),
                                       MapExpr::moebius(DiskPoint{w}).inverse()});
    const double dz = 1.0 - std::norm(z);
    const double dw = 1.0 - std::norm(w);
    const double beta = dz * std::norm(1.0 - w) / (std::norm(1.0 - z) * dw * std::sqrt(alpha));
    const double actual = std::abs(map.deriv(z));
    const double bound = bound_theorem_a(z, w, beta, variant);
    std::ostringstream os;
    os << "extremal alpha=" << alpha << " z=" << fmt_complex(z) << " w=" << fmt_complex(w);
    rec.record({"extremal_value", os.str(), bound, actual, std::abs(actual - bound) <= 1e-9 * std::max(1.0, actual)});
  }
  return rec.result();
}

nlohmann::json variant_audit_json(const VariantAudit& a) {
  nlohmann::json j;
  j["passed"] = a.passed;
  j["cases"] = a.cases;
  j["failures"] = a.failures;
  if (a.first_failure) {
    j["witness"] = {{"check", a.first_failure->check},
                    {"case", a.first_failure->witness},
                    {"bound", a.first_failure->bound},
                    {"expected", a.first_failure->expected}};
  }
  return j;
}

}  // namespace

AuditVerdict audit_variants(std::uint64_t seed) {
  AuditVerdict verdict;
  verdict.as_printed = audit_one(Variant::AsPrinted, seed);
  verdict.derived_consistent = audit_one(Variant::DerivedConsistent, seed);
  const auto anchors = BoundaryAnchorSet::make({0.0, 2.0, 4.0}, {2.0, 1.5, 3.0});
  const HeightVector heights{{0.5, 0.25, 0.25}};
  verdict.agree_at_origin = bound_general(0.0, 0.0, anchors, heights, Variant::AsPrinted) ==
                            bound_general(0.0, 0.0, anchors, heights, Variant::DerivedConsistent);
  return verdict;
}

nlohmann::json audit_to_json(const AuditVerdict& verdict) {
  nlohmann::json j;
  j["as_printed"] = variant_audit_json(verdict.as_printed);
  j["derived_consistent"] = variant_audit_json(verdict.derived_consistent);
  j["agree_at_origin"] = verdict.agree_at_origin;
  j["variant_operative"] = to_string(verdict.operative());
  return j;
}

}  // namespace digon
