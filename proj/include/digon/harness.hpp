#pragma once

// Test-map generation and bound verification: closed-form and ODE families of
// admissible self-maps, the quarantined non-univalent witness, and the
// deterministic suite report.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "digon/bounds.hpp"
#include "digon/conformal_maps.hpp"
#include "digon/extremal_config.hpp"

namespace digon {

enum class FamilyKind { AutomorphismFixingAnchors, PickConjugate, OdeExtremal, Composition, NonunivalentSquare };

std::string to_string(FamilyKind kind);
FamilyKind family_from_string(const std::string& s);

/// Recognized params per kind (all optional):
///   automorphism_fixing_anchors: "anchors" [angles] or "n" (1 or 2, random anchors); "c" fixed or "c_max" (< 0.95)
///   pick_conjugate:              "alpha" fixed or "alpha_min"/"alpha_max"; "radius"; "center": "random" | "origin"
///   composition:                 "length_max" (2..4); "radius"
///   ode_extremal:                "n_max" (1..4); "c_min"; "c_max"
///   nonunivalent_square:         none
struct FamilySpec {
  FamilyKind kind = FamilyKind::AutomorphismFixingAnchors;
  int count = 1;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 7;
};

enum class Context { TheoremA, Origin, General };
std::string to_string(Context context);

struct BoundInputs {
  Context context = Context::TheoremA;
  Complex z;
  std::vector<double> anchors;  // angles, increasing in [0, 2 pi)
  std::vector<double> betas;    // nominal angular derivatives at the anchors
  std::vector<double> alphas;   // heights (a single 1 for the one-point bound)
};

struct OdeMember {
  ExtremalConfig config;
  double c = 1.0;
};

struct GeneratedCase {
  std::string family;
  std::string label;
  std::variant<MapExpr, OdeMember> map;
  BoundInputs inputs;
  bool witness = false;  // the documented non-univalent exception
};

/// Deterministic in spec.seed. Throws InputError for unrealizable requests.
std::vector<GeneratedCase> generate_family(const FamilySpec& spec);

struct Tolerances {
  double violation = 1e-8;      // slack below -violation * max(1, bound) is a violation
  double equality = 1e-4;       // |slack| below equality * max(bound, tiny) is equality
  double admissibility = 1e-6;  // relative mismatch allowed in re-measured anchor data
};

enum class Verdict { Ok, Equality, Violation, Inadmissible, WitnessConfirmed, WitnessNotConfirmed };
std::string to_string(Verdict verdict);

struct CheckResult {
  std::size_t index = 0;
  std::string family;
  std::string map;
  Context context = Context::TheoremA;
  Complex z;
  Complex w;
  std::vector<double> anchors;
  std::vector<double> betas;  // re-measured
  std::vector<double> alphas;
  double actual = 0.0;
  double bound_as_printed = 0.0;
  double bound_derived = 0.0;
  double slack_as_printed = 0.0;
  double slack_derived = 0.0;
  double julia_min_slack = 0.0;  // relative, over the sample points and anchors
  Verdict verdict = Verdict::Ok;
  std::string reason;
};

/// Re-measures the anchors, evaluates both bound variants and classifies the
/// case under the DerivedConsistent (operative) variant.
CheckResult verify_bound(const GeneratedCase& c, const Tolerances& tol = {});

nlohmann::json check_to_json(const CheckResult& r);

struct SuiteConfig {
  std::uint64_t seed = 7;
  std::vector<FamilySpec> families;
  Tolerances tolerances;
};

/// Families covering every kind, with `cases` admissible maps plus the witness.
SuiteConfig default_suite(std::uint64_t seed, int cases);
/// {"seed", "families": [{"kind", "count", "params"}], "tolerances": {...}}.
SuiteConfig suite_from_json(const nlohmann::json& j);
nlohmann::json suite_to_json(const SuiteConfig& s);

struct SuiteSummary {
  int total = 0;
  int ok = 0;
  int equality = 0;
  int violations = 0;
  int inadmissible = 0;
  int witness_confirmed = 0;
  int witness_not_confirmed = 0;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckResult> results;
  SuiteSummary summary;
  AuditVerdict audit;

  /// True when no admissible map violates the operative bound, every map was
  /// admissible and every witness behaved as documented.
  bool clean() const {
    return summary.violations == 0 && summary.inadmissible == 0 && summary.witness_not_confirmed == 0;
  }
};

SuiteReport run_suite(const SuiteConfig& config);
nlohmann::json report_to_json(const SuiteReport& report);

}  // namespace digon
