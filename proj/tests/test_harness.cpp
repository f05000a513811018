#include "doctest.h"

#include "digon/harness.hpp"

using namespace digon;

namespace {

GeneratedCase manual(MapExpr map, Context context, Complex z, std::vector<double> betas) {
  GeneratedCase g;
  g.family = "manual";
  g.label = describe(map);
  g.map = std::move(map);
  g.inputs.context = context;
  g.inputs.z = z;
  g.inputs.anchors = {0.0};
  g.inputs.betas = std::move(betas);
  g.inputs.alphas = {1.0};
  return g;
}

}  // namespace

TEST_CASE("generate_family examples") {
  FamilySpec spec{FamilyKind::AutomorphismFixingAnchors, 1, {{"anchors", {0.0}}, {"c", 0.5}}, 7};
  const auto autos = generate_family(spec);
  REQUIRE(autos.size() == 1);
  const auto& t = std::get<MapExpr>(autos[0].map);
  CHECK(std::abs(t.eval(0.0) - 0.5) < 1e-14);
  CHECK(std::abs(t.eval(1.0 - 1e-12) - 1.0) < 1e-9);
  CHECK(autos[0].inputs.betas[0] == doctest::Approx(1.0 / 3.0));

  const auto squares = generate_family({FamilyKind::NonunivalentSquare, 1, nlohmann::json::object(), 7});
  REQUIRE(squares.size() == 1);
  CHECK(squares[0].witness);
  const auto& sq = std::get<MapExpr>(squares[0].map);
  CHECK(std::abs(sq.eval(1.0) - 1.0) == 0.0);
  CHECK(std::abs(sq.deriv(1.0) - 2.0) == 0.0);
  CHECK(std::abs(sq.deriv(0.0)) == 0.0);

  const auto picks =
      generate_family({FamilyKind::PickConjugate, 1, {{"alpha", 0.25}, {"center", "origin"}, {"anchors", {0.0}}}, 7});
  REQUIRE(picks.size() == 1);
  const auto& p = std::get<MapExpr>(picks[0].map);
  CHECK(std::abs(p.deriv(0.0)) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(picks[0].inputs.betas[0] == doctest::Approx(2.0));
  CHECK(picks[0].inputs.context == Context::Origin);
}

TEST_CASE("generation is deterministic and validated") {
  FamilySpec spec{FamilyKind::Composition, 20, {{"length_max", 4}}, 99};
  const auto a = generate_family(spec);
  const auto b = generate_family(spec);
  REQUIRE(a.size() == 20);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].label == b[k].label);
  CHECK_THROWS_AS(generate_family({FamilyKind::AutomorphismFixingAnchors, 1, {{"n", 3}, {"c", 0.5}}, 1}), InputError);
  CHECK_THROWS_AS(generate_family({FamilyKind::AutomorphismFixingAnchors, 1, {{"c", 0.97}}, 1}), InputError);
  CHECK_THROWS_AS(generate_family({FamilyKind::PickConjugate, 1, {{"alpha", 1.5}}, 1}), InputError);
  CHECK_THROWS_AS(family_from_string("loewner"), InputError);
  CHECK(family_from_string(to_string(FamilyKind::OdeExtremal)) == FamilyKind::OdeExtremal);
}

TEST_CASE("verify_bound examples") {
  const auto t = manual(MapExpr::automorphism(DiskPoint{-0.5, 0.0}, 0.0), Context::TheoremA, 0.0, {1.0 / 3.0});
  const auto rt = verify_bound(t);
  CHECK(rt.verdict == Verdict::Equality);
  CHECK(std::abs(rt.slack_derived) < 1e-9);
  CHECK(rt.slack_as_printed < -0.5);

  auto sq = manual(MapExpr::square(), Context::Origin, 0.0, {2.0});
  sq.witness = true;
  const auto rs = verify_bound(sq);
  CHECK(rs.actual == 0.0);
  CHECK(rs.slack_derived == doctest::Approx(-0.25));
  CHECK(rs.verdict == Verdict::WitnessConfirmed);
  CHECK(to_string(rs.verdict) == "non-univalent witness confirmed");

  const auto rp = verify_bound(manual(MapExpr::pick(0.25), Context::Origin, 0.0, {2.0}));
  CHECK(rp.verdict == Verdict::Equality);
  CHECK(std::abs(rp.slack_derived) < 1e-9);

  // A wrong nominal beta is caught by re-measurement.
  const auto bad = verify_bound(manual(MapExpr::pick(0.25), Context::Origin, 0.0, {3.0}));
  CHECK(bad.verdict == Verdict::Inadmissible);
  CHECK_FALSE(bad.reason.empty());
}

TEST_CASE("identity maps give zero slack") {
  SuiteConfig cfg;
  cfg.seed = 3;
  cfg.families = {{FamilyKind::AutomorphismFixingAnchors, 10, {{"n", 3}, {"c", 0.0}}, 0},
                  {FamilyKind::AutomorphismFixingAnchors, 10, {{"n", 1}, {"c", 0.0}}, 0}};
  const auto report = run_suite(cfg);
  CHECK(report.clean());
  CHECK(report.summary.total == 20);
  for (const auto& r : report.results) {
    CHECK(std::abs(r.slack_derived) < 1e-12);
    CHECK(r.bound_derived == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("ode extremal members are equality cases") {
  SuiteConfig cfg;
  cfg.families = {{FamilyKind::OdeExtremal, 2, {{"n_max", 1}}, 0}, {FamilyKind::OdeExtremal, 2, {{"n_max", 2}}, 0}};
  const auto report = run_suite(cfg);
  CHECK(report.clean());
  for (const auto& r : report.results) {
    CHECK(r.verdict == Verdict::Equality);
    CHECK(std::abs(r.slack_derived) < 1e-4 * r.bound_derived);
  }
}

TEST_CASE("default suite is clean and reproducible") {
  const auto cfg = default_suite(7, 300);
  const auto a = run_suite(cfg);
  CHECK(a.clean());
  CHECK(a.summary.violations == 0);
  CHECK(a.summary.witness_confirmed == 1);
  CHECK_FALSE(a.audit.as_printed.passed);
  CHECK(a.audit.operative() == Variant::DerivedConsistent);
  const auto b = run_suite(cfg);
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());

  const auto back = suite_from_json(suite_to_json(cfg));
  CHECK(suite_to_json(back) == suite_to_json(cfg));
  CHECK_THROWS_AS(suite_from_json(nlohmann::json{{"seed", 1}}), InputError);
}
