// Acceptance checks: one PASS/FAIL line per criterion.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "digon/angular.hpp"
#include "digon/bounds.hpp"
#include "digon/cli.hpp"
#include "digon/extremal_config.hpp"
#include "digon/extremal_map.hpp"
#include "digon/harness.hpp"
#include "digon/moduli.hpp"

using namespace digon;

namespace {

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (notes.size() < 5) notes.push_back(what);
    }
  }
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

int report(int id, const std::string& title, const Criterion& c) {
  std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " AC" << id << " " << title;
  for (const auto& n : c.notes) std::cout << " | " << n;
  std::cout << "\n";
  return c.ok ? 0 : 1;
}

struct RandomConfig {
  std::vector<double> theta;
  std::vector<double> alpha;
};

RandomConfig random_config(Rng& rng, int n) {
  RandomConfig rc;
  for (int k = 0; k < n; ++k) rc.theta.push_back(rng.uniform(0.0, kTwoPi));
  std::sort(rc.theta.begin(), rc.theta.end());
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    rc.alpha.push_back(rng.uniform(0.02, 1.0));
    total += rc.alpha.back();
  }
  double partial = 0.0;
  for (int k = 0; k + 1 < n; ++k) {
    rc.alpha[k] /= total;
    partial += rc.alpha[k];
  }
  rc.alpha.back() = 1.0 - partial;
  return rc;
}

ExtremalConfig solve(const RandomConfig& rc) {
  return solve_deltas(BoundaryAnchorSet::make(rc.theta), HeightVector::make(rc.alpha));
}

Criterion ac1() {
  Criterion c;
  const auto sym = solve({{0.0, kPi}, {0.5, 0.5}});
  c.require(std::abs(sym.deltas[0] - kPi / 2) < 1e-10 && std::abs(sym.deltas[1] - 3 * kPi / 2) < 1e-10,
            "symmetric deltas");
  const auto asym = solve({{0.0, kPi}, {0.75, 0.25}});
  c.require(std::abs(asym.deltas[0] - 2 * kPi / 3) < 1e-10 && std::abs(asym.deltas[1] - 4 * kPi / 3) < 1e-10,
            "asymmetric deltas");
  Rng rng(101);
  double worst_res = 0.0, worst_mod = 0.0, worst_sum = 0.0;
  for (int i = 0; i < 500; ++i) {
    const auto cfg = solve(random_config(rng, 1 + static_cast<int>(rng.below(6))));
    worst_res = std::max(worst_res, residue_check(cfg).max_residual());
    worst_mod = std::max(worst_mod, cfg.max_root_modulus_deviation);
    worst_sum = std::max(worst_sum, std::abs(delta_theta_sum(cfg) - kPi));
  }
  c.require(worst_res < 1e-9, "residual " + num(worst_res));
  c.require(worst_mod < 1e-10, "root modulus " + num(worst_mod));
  c.require(worst_sum < 1e-10, "delta-theta sum " + num(worst_sum));
  return c;
}

Criterion ac2() {
  Criterion c;
  Rng rng(202);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto cfg = solve(random_config(rng, 1 + static_cast<int>(rng.below(6))));
    for (int p = 0; p < 100; ++p) {
      Complex zeta = rng.in_disk(2.0);
      if (std::abs(std::abs(zeta) - 1.0) < 1e-2) zeta *= 0.9;
      Complex lhs = 1.0, rhs = 1.0;
      for (std::size_t k = 0; k < cfg.size(); ++k) {
        lhs *= (zeta - cfg.zero(k)) / (zeta - cfg.anchors.point(k));
        rhs += 2.0 * cfg.heights.alphas[k] * cfg.anchors.point(k) / (zeta - cfg.anchors.point(k));
      }
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
  }
  c.require(worst < 1e-10, "identity error " + num(worst));
  return c;
}

Criterion ac3() {
  Criterion c;
  const double v = MapExpr::pick(0.25).eval(0.5).real();
  c.require(std::abs(v - (2.0 - std::sqrt(3.0))) < 1e-12, "p_1/4(1/2) error " + num(v - (2.0 - std::sqrt(3.0))));
  for (double a : {0.1, 0.25, 0.5, 0.9}) {
    const auto e = angular_derivative(MapExpr::pick(a), CirclePoint{0.0}, 1.0);
    const double err = std::abs(e.value - 1.0 / std::sqrt(a));
    c.require(err < 1e-6, "alpha " + num(a) + " error " + num(err));
  }
  return c;
}

Criterion ac4() {
  Criterion c;
  Rng rng(404);
  double worst_eq = 0.0;
  for (double cc : {0.25, -0.25, 0.5, -0.5, 0.8, -0.8}) {
    const auto t = MapExpr::automorphism(DiskPoint{-cc, 0.0}, 0.0);
    const double beta = (1.0 - cc) / (1.0 + cc);
    for (int i = 0; i < 20; ++i) {
      const Complex z = rng.in_disk(0.9);
      const double bound = bound_theorem_a(z, t.eval(z), beta, Variant::DerivedConsistent);
      worst_eq = std::max(worst_eq, std::abs(std::abs(t.deriv(z)) - bound));
    }
  }
  c.require(worst_eq < 1e-9, "automorphism slack " + num(worst_eq));

  double worst_radial = 0.0;
  for (double cc : {0.25, -0.5, 0.8}) {
    const auto t = MapExpr::automorphism(DiskPoint{-cc, 0.0}, 0.0);
    const double beta = (1.0 - cc) / (1.0 + cc);
    const Complex z = 1.0 - 1e-6;
    const double bound = bound_theorem_a(z, t.eval(z), beta, Variant::DerivedConsistent);
    worst_radial = std::max(worst_radial, std::abs(bound - beta) / beta);
  }
  c.require(worst_radial < 1e-3, "radial limit " + num(worst_radial));

  const auto verdict = audit_variants(7);
  c.require(verdict.derived_consistent.passed, "derived-consistent audit failed");
  c.require(!verdict.as_printed.passed && verdict.as_printed.first_failure &&
                std::abs(verdict.as_printed.first_failure->bound - 4.0 / 3.0) < 1e-12 &&
                std::abs(verdict.as_printed.first_failure->expected - 0.75) < 1e-12,
            "as-printed witness not reported");
  std::ostringstream out, err;
  const char* argv[] = {"digon", "audit", "variants"};
  c.require(cli::dispatch(3, argv, out, err) == 1, "audit exit status");
  return c;
}

Criterion ac5() {
  Criterion c;
  const auto one = solve({{0.0}, {1.0}});
  std::vector<double> rays;
  for (int k = 0; k < 8; ++k) rays.push_back(k * kPi / 4);
  const auto sampled = integrate_extremal_ode(one, 0.25, rays, 0.9);
  const auto pick = MapExpr::pick(0.25);
  double worst = 0.0;
  bool reached = true;
  for (const auto& ray : sampled.rays) {
    reached = reached && !ray.truncated && ray.samples.back().r >= 0.9 - 1e-12;
    for (const auto& s : ray.samples) worst = std::max(worst, std::abs(s.w - pick.eval(s.zeta)));
  }
  c.require(reached, "a ray stopped early");
  c.require(worst < 1e-6, "ODE vs Pick " + num(worst));
  c.require(sampled.max_qd_residual() < 1e-8, "transport residual " + num(sampled.max_qd_residual()));

  const auto r1 = equality_audit(one, 0.25);
  c.require(r1.residual < 1e-3, "n=1 equality residual " + num(r1.residual));
  const auto r2 = equality_audit(solve({{0.0, kPi}, {0.5, 0.5}}), 0.5);
  c.require(r2.residual < 1e-3, "n=2 equality residual " + num(r2.residual));
  const auto r3 = equality_audit(solve({{0.5, 3.0}, {0.7, 0.3}}), 0.6);
  c.require(r3.residual < 1e-3, "n=2 asymmetric equality residual " + num(r3.residual));
  return c;
}

Criterion ac6() {
  Criterion c;
  const double e = std::exp(1.0);
  const std::vector<double> betas{e, e * e};
  const auto a = optimal_alpha(betas);
  c.require(std::abs(a.alphas[0] - 2.0 / 3.0) <= 1e-14 && std::abs(a.alphas[1] - 1.0 / 3.0) <= 1e-14,
            "optimal alpha");
  const double slack = corollary_check(betas, std::exp(-4.0 / 3.0));
  c.require(std::abs(slack) < 1e-12, "corollary slack " + num(slack));
  Rng rng(606);
  const double optimum = bound_origin(betas, a);
  double sampled = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double t = rng.uniform();
    sampled = std::max(sampled, bound_origin(betas, HeightVector{{t, 1.0 - t}}));
  }
  c.require(sampled <= optimum + 1e-12, "simplex sample beats the optimum");
  const std::vector<double> three{1.5, 2.5, 9.0};
  const double opt3 = bound_origin(three, optimal_alpha(three));
  double s3 = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double u = rng.uniform(), v = rng.uniform();
    if (u > v) std::swap(u, v);
    s3 = std::max(s3, bound_origin(three, HeightVector{{u, v - u, 1.0 - v}}));
  }
  c.require(s3 <= opt3 + 1e-12, "three-anchor simplex sample beats the optimum");
  return c;
}

Criterion ac7() {
  Criterion c;
  Rng rng(707);
  double worst_origin = 0.0, worst_a = 0.0, worst_route = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto rc = random_config(rng, 1 + static_cast<int>(rng.below(5)));
    std::vector<double> betas;
    for (std::size_t k = 0; k < rc.theta.size(); ++k) betas.push_back(rng.uniform(1.0, 6.0));
    const auto anchors = BoundaryAnchorSet::make(rc.theta, betas);
    const auto heights = HeightVector::make(rc.alpha);
    const double origin = bound_origin(betas, heights);
    for (auto v : {Variant::AsPrinted, Variant::DerivedConsistent}) {
      worst_origin = std::max(worst_origin, std::abs(bound_general(0.0, 0.0, anchors, heights, v) - origin) / origin);
    }
    const Complex z = rng.in_disk(0.95);
    for (std::size_t j = 0; j < rc.theta.size(); ++j) {
      const double closed = reduced_modulus_general(anchors, heights, z, j, Variant::DerivedConsistent);
      const double routed = reduced_modulus_by_transfer(anchors, heights, z, j);
      worst_route = std::max(worst_route, std::abs(closed - routed) / std::max(1.0, std::abs(closed)));
    }

    const Complex zz = rng.in_disk(0.95);
    const Complex ww = rng.in_disk(0.95);
    const double beta = rng.uniform(0.2, 5.0);
    const auto one = BoundaryAnchorSet::make({0.0}, {beta});
    for (auto v : {Variant::AsPrinted, Variant::DerivedConsistent}) {
      const double expect = bound_theorem_a(zz, ww, beta, v);
      worst_a = std::max(worst_a, std::abs(bound_general(zz, ww, one, HeightVector::make({1.0}), v) - expect) / expect);
    }
  }
  c.require(worst_origin < 1e-12, "general at origin " + num(worst_origin));
  c.require(worst_a < 1e-12, "n=1 reduction " + num(worst_a));
  c.require(worst_route < 1e-12, "two-route moduli " + num(worst_route));
  return c;
}

Criterion ac8() {
  Criterion c;
  GeneratedCase sq = generate_family({FamilyKind::NonunivalentSquare, 1, nlohmann::json::object(), 7}).at(0);
  const auto r = verify_bound(sq);
  c.require(r.actual == 0.0, "square derivative at 0");
  c.require(r.bound_derived == 0.25, "square bound");
  c.require(to_string(r.verdict) == "non-univalent witness confirmed", "witness verdict " + to_string(r.verdict));

  const auto config = default_suite(7, 10000);
  const auto first = run_suite(config);
  int admissible = first.summary.total - first.summary.witness_confirmed - first.summary.witness_not_confirmed;
  c.require(admissible >= 10000, "only " + std::to_string(admissible) + " admissible maps");
  c.require(first.summary.violations == 0, std::to_string(first.summary.violations) + " violations");
  c.require(first.clean(), "suite not clean");
  double worst = 0.0;
  for (const auto& res : first.results) {
    if (res.family != to_string(FamilyKind::NonunivalentSquare)) worst = std::min(worst, res.slack_derived);
  }
  c.require(worst >= -1e-8, "slack " + num(worst));
  const auto second = run_suite(config);
  c.require(report_to_json(first).dump() == report_to_json(second).dump(), "reports differ between runs");
  return c;
}

}  // namespace

int main() {
  int failures = 0;
  auto guarded = [&](int id, const std::string& title, Criterion (*fn)()) {
    Criterion c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    failures += report(id, title, c);
  };
  guarded(1, "configuration solver", ac1);
  guarded(2, "partial-fraction identity", ac2);
  guarded(3, "Pick map and angular derivatives", ac3);
  guarded(4, "variant audit", ac4);
  guarded(5, "ODE extremal against closed form", ac5);
  guarded(6, "optimal heights and corollary", ac6);
  guarded(7, "reductions and two-route moduli", ac7);
  guarded(8, "non-univalent witness and 10^4 suite", ac8);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
