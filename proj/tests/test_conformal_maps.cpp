#include "doctest.h"

#include "digon/conformal_maps.hpp"
#include "digon/map_json.hpp"

using namespace digon;

namespace {

MapExpr t_half() { return MapExpr::automorphism(DiskPoint{-0.5, 0.0}, 0.0); }

}  // namespace

TEST_CASE("map_eval examples") {
  CHECK(map_eval(MapExpr::pick(0.25), DiskPoint{0.5, 0.0}).value().real() ==
        doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-14));
  for (double a : {0.1, 0.5, 1.0}) CHECK(std::abs(map_eval(MapExpr::pick(a), DiskPoint{}).value()) == 0.0);
  CHECK(std::abs(map_eval(MapExpr::moebius(DiskPoint{0.5, 0.0}), DiskPoint{}).value() - Complex(-0.5)) < 1e-15);
}

TEST_CASE("map_deriv examples") {
  CHECK(std::abs(map_deriv(MapExpr::moebius(DiskPoint{0.5, 0.0}), DiskPoint{})) == doctest::Approx(0.75));
  const auto tt = t_half().then(t_half());
  CHECK(std::abs(map_deriv(tt, DiskPoint{})) == doctest::Approx(0.36).epsilon(1e-14));
  for (double a : {0.05, 0.3, 0.9}) CHECK(map_deriv(MapExpr::pick(a), DiskPoint{}).real() == doctest::Approx(a));
}

TEST_CASE("map_inverse_eval examples") {
  CHECK(map_inverse_eval(MapExpr::pick(0.25), DiskPoint{2.0 - std::sqrt(3.0), 0.0}).value().real() ==
        doctest::Approx(0.5).epsilon(1e-14));
  const auto b = MapExpr::moebius(DiskPoint{0.5, 0.0});
  CHECK(std::abs(map_inverse_eval(b, DiskPoint{}).value() - Complex(0.5)) < 1e-15);
  CHECK(std::abs(b.inverse().eval(1.0) - Complex(1.0)) < 1e-15);
}

TEST_CASE("Pick inverse rejects the omitted slit") {
  const double tip = pick_slit_tip(0.25);
  CHECK(tip == doctest::Approx(0.25 / std::pow(1.0 + std::sqrt(0.75), 2)));
  CHECK_THROWS_AS(map_inverse_eval(MapExpr::pick(0.25), DiskPoint{-tip - 0.1, 0.0}), RangeError);
  CHECK_NOTHROW(map_inverse_eval(MapExpr::pick(0.25), DiskPoint{-tip + 0.01, 0.0}));
}

TEST_CASE("b_normalized examples") {
  const auto id = MapExpr::moebius(DiskPoint{});
  CHECK(std::abs(id.eval(Complex(0.3, -0.4)) - Complex(0.3, -0.4)) < 1e-16);
  // |B_z'(1)| = (1 - |z|^2)/|1 - z|^2 = 3 for z = 0.5.
  const auto b = MapExpr::moebius(DiskPoint{0.5, 0.0});
  CHECK(std::abs(b.deriv(1.0 - 1e-9)) == doctest::Approx(3.0).epsilon(1e-8));
  const auto bi = MapExpr::moebius(DiskPoint{0.0, 0.5});
  CHECK(std::abs(bi.eval(Complex(0.0, 0.5))) < 1e-14);
  CHECK(std::abs(bi.eval(1.0) - 1.0) < 1e-14);
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(DiskPoint(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(MapExpr::pick(0.0), DomainError);
  CHECK_THROWS_AS(MapExpr::pick(1.5), DomainError);
  CHECK_THROWS_AS(map_inverse_eval(MapExpr::square(), DiskPoint{0.25, 0.0}), RangeError);
}

TEST_CASE("Pick map agrees with the square-root formula on the real segment") {
  for (double a : {0.1, 0.25, 0.7}) {
    for (double x : {-0.9, -0.3, 0.2, 0.8}) {
      CHECK(MapExpr::pick(a).eval(x).real() == doctest::Approx(pick_printed_formula(a, x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("properties on random points") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Complex z = rng.in_disk(0.95);
    const double t = rng.uniform(0.0, kTwoPi);
    const auto b = MapExpr::moebius(DiskPoint{z});
    CHECK(std::abs(std::abs(b.eval(std::polar(1.0, t))) - 1.0) < 1e-12);

    const double alpha = rng.uniform(0.05, 1.0);
    const Complex zeta = rng.in_disk(0.95);
    const Complex p = MapExpr::pick(alpha).eval(zeta);
    CHECK(std::abs(koebe(p) - alpha * koebe(zeta)) <= 1e-12 * std::max(1.0, std::abs(koebe(p))));

    const auto expr = MapExpr::compose({MapExpr::moebius(DiskPoint{rng.in_disk(0.8)}), MapExpr::pick(alpha),
                                        MapExpr::automorphism(DiskPoint{rng.in_disk(0.8)}, rng.uniform(0.0, 6.0)),
                                        MapExpr::moebius(DiskPoint{rng.in_disk(0.8)}).inverse()});
    const Complex x = rng.in_disk(0.85);
    const double h = 1e-6;
    const Complex fd = (expr.eval(x + h) - expr.eval(x - h)) / (2.0 * h);
    CHECK(std::abs(fd - expr.deriv(x)) <= 1e-8 * (1.0 + std::abs(expr.deriv(x))));
    CHECK(std::abs(expr.inverse_eval(expr.eval(x)) - x) < 1e-10);
    CHECK(std::abs(expr.inverse().eval(expr.eval(x)) - x) < 1e-10);
  }
}

TEST_CASE("composition order and inverse nodes") {
  const auto a = MapExpr::pick(0.5);
  const auto b = MapExpr::rotation(1.0);
  const Complex x(0.2, 0.3);
  CHECK(std::abs(a.then(b).eval(x) - b.eval(a.eval(x))) < 1e-16);
  CHECK(std::abs(MapExpr::compose({a, b}).inverse().eval(b.eval(a.eval(x))) - x) < 1e-14);
  CHECK(std::holds_alternative<PickMap>(a.inverse().inverse().node()));
  CHECK(MapExpr::identity().is_univalent());
  CHECK_FALSE(MapExpr::compose({a, MapExpr::square()}).is_univalent());
}

TEST_CASE("JSON round trip") {
  const auto expr = MapExpr::compose({MapExpr::moebius(DiskPoint{0.1, -0.2}), MapExpr::pick(0.3),
                                      MapExpr::automorphism(DiskPoint{0.4, 0.1}, 0.7).inverse(), MapExpr::square()});
  const auto back = map_from_json(map_to_json(expr));
  CHECK(map_to_json(back) == map_to_json(expr));
  CHECK(std::abs(back.eval(Complex(0.3, 0.2)) - expr.eval(Complex(0.3, 0.2))) < 1e-16);
  CHECK_THROWS_AS(map_from_json(nlohmann::json{{"kind", "spiral"}}), InputError);
  CHECK_THROWS_AS(map_from_json(nlohmann::json{{"kind", "pick"}}), InputError);
  CHECK_THROWS_AS(map_from_json(nlohmann::json{{"kind", "pick"}, {"alpha", 2.0}}), DomainError);
}
