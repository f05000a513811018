#pragma once

// Sharp lower bounds for |phi'(z)| of univalent self-maps of the disk with
// prescribed boundary fixed points and angular derivatives, and the audit
// that decides which reading of the general-position formulas is operative.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "digon/moduli.hpp"

namespace digon {

/// One fixed point at 1 with phi'(1) = beta:
///   AsPrinted:         (1/beta^2) (1-|z|^2)^3/|1-z|^4 * |1-w|^4/(1-|w|^2)^3
///   DerivedConsistent: (1/beta^2) (1-|z|^2)  /|1-z|^4 * |1-w|^4/(1-|w|^2)
double bound_theorem_a(Complex z, Complex w, double beta, Variant variant);

/// Pick parameter of the extremal map B_w^{-1} o p_alpha o B_z. Throws
/// DomainError unless the result lies in (0, 1].
double alpha_star_relation(Complex z, Complex w, double beta);

/// prod_j beta_j^{-2 alpha_j^2}; maps fixing 0 require every beta_j >= 1.
double bound_origin(std::span<const double> betas, const HeightVector& heights);

/// alpha_j = (log beta_j sum_k 1/log beta_k)^{-1}. Throws DomainError when some beta_j <= 1.
HeightVector optimal_alpha(std::span<const double> betas);

/// -2/log phi'(0) - sum_j 1/log beta_j; +inf when phi'(0) = 1.
double corollary_check(std::span<const double> betas, double phi_prime_0);

/// General position (z not fixed); w = phi(z). `anchors` must carry betas.
double bound_general(Complex z, Complex w, const BoundaryAnchorSet& anchors, const HeightVector& heights,
                     Variant variant);

/// The factor F_j of the AsPrinted general-position bound.
double printed_f(const BoundaryAnchorSet& anchors, const HeightVector& heights, std::size_t j, Complex z);

struct BoundReport {
  double as_printed = 0.0;
  double derived_consistent = 0.0;
  Variant operative = Variant::DerivedConsistent;
  std::optional<double> actual;  // |phi'(z)| of a supplied map
  std::optional<double> slack;   // actual - operative bound

  double operative_bound() const {
    return operative == Variant::AsPrinted ? as_printed : derived_consistent;
  }
};

nlohmann::json report_to_json(const BoundReport& report);

struct AuditCase {
  std::string check;
  std::string witness;
  double bound = 0.0;
  double expected = 0.0;
  bool passed = true;
};

struct VariantAudit {
  Variant variant = Variant::DerivedConsistent;
  bool passed = true;
  int cases = 0;
  int failures = 0;
  std::optional<AuditCase> first_failure;
};

struct AuditVerdict {
  VariantAudit as_printed;
  VariantAudit derived_consistent;
  bool agree_at_origin = true;

  /// The variant whose audit passed (DerivedConsistent when both or neither pass).
  Variant operative() const;
  bool all_passed() const { return as_printed.passed && derived_consistent.passed; }
};

/// Canned oracle suite run for both variants: automorphism equality, radial
/// limit toward the anchor, reductions (n = 1 and z = w = 0), and the
/// extremal value of B_w^{-1} o p_alpha o B_z.
AuditVerdict audit_variants(std::uint64_t seed = 7);

nlohmann::json audit_to_json(const AuditVerdict& verdict);

}  // namespace digon
