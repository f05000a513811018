#include "digon/conformal_maps.hpp"

#include <sstream>

namespace digon {

namespace {

// Root of x^2 - (2 + t) x + 1 = 0 (roots multiply to 1) closest to the origin:
// x = 2 / (2 + t +- sqrt(t (t + 4))), taking the sign that maximizes the
// denominator. This is the Koebe transfer k(x) = 1/t for k(x) = x/(1-x)^2.
Complex koebe_transfer_root(Complex t) {
  const Complex s = std::sqrt(t * (t + 4.0));
  const Complex d1 = 2.0 + t + s;
  const Complex d2 = 2.0 + t - s;
  return 2.0 / (std::abs(d1) >= std::abs(d2) ? d1 : d2);
}

Complex moebius_factor(Complex z) {
  return (1.0 - std::conj(z)) / (1.0 - z);
}

Complex automorphism_eval(Complex a, Complex unit, Complex zeta) {
  return unit * (zeta - a) / (1.0 - std::conj(a) * zeta);
}

Complex automorphism_deriv(Complex a, Complex unit, Complex zeta) {
  const Complex d = 1.0 - std::conj(a) * zeta;
  return unit * (1.0 - std::norm(a)) / (d * d);
}

Complex automorphism_inverse(Complex a, Complex unit, Complex w) {
  const Complex u = w / unit;
  return (u + a) / (1.0 + std::conj(a) * u);
}

Complex pick_eval(double alpha, Complex zeta) {
  if (zeta == Complex(0.0)) return 0.0;
  if (alpha == 1.0) return zeta;
  const Complex one_minus = 1.0 - zeta;
  return koebe_transfer_root(one_minus * one_minus / (alpha * zeta));
}

Complex pick_deriv(double alpha, Complex zeta) {
  const Complex w = pick_eval(alpha, zeta);
  return alpha * koebe_deriv(zeta) / koebe_deriv(w);
}

Complex pick_inverse(double alpha, Complex w) {
  if (w == Complex(0.0)) return 0.0;
  const double tip = pick_slit_tip(alpha);
  if (alpha < 1.0 && std::abs(w.imag()) <= 1e-15 && w.real() <= -tip) {
    throw RangeError("point lies on the omitted slit of the Pick map");
  }
  if (alpha == 1.0) return w;
  const Complex one_minus = 1.0 - w;
  const Complex zeta = koebe_transfer_root(alpha * one_minus * one_minus / w);
  if (!(std::abs(zeta) < 1.0)) {
    throw RangeError("point is not attained by the Pick map");
  }
  return zeta;
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("Pick parameter alpha must lie in (0, 1]");
  }
}

}  // namespace

Complex koebe(Complex z) {
  const Complex d = 1.0 - z;
  return z / (d * d);
}

Complex koebe_deriv(Complex z) {
  const Complex d = 1.0 - z;
  return (1.0 + z) / (d * d * d);
}

double pick_slit_tip(double alpha) {
  check_alpha(alpha);
  const double s = 1.0 + std::sqrt(1.0 - alpha);
  return alpha / (s * s);
}

double pick_printed_formula(double alpha, double x) {
  check_alpha(alpha);
  if (!(x > -1.0 && x < 1.0)) throw DomainError("square-root Pick formula is used on (-1, 1) only");
  const double root = 1.0 - x + std::sqrt((1.0 - x) * (1.0 - x) + 4.0 * alpha * x);
  return 4.0 * alpha * x / (root * root);
}

NormalizedMoebius b_normalized(DiskPoint z) { return NormalizedMoebius{z}; }

MapExpr::MapExpr() : MapExpr(Node{Compose{}}) {}

MapExpr::MapExpr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

MapExpr MapExpr::identity() { return MapExpr(); }

MapExpr MapExpr::moebius(DiskPoint base) { return MapExpr(Node{NormalizedMoebius{base}}); }

MapExpr MapExpr::automorphism(DiskPoint a, double rotation) {
  if (!std::isfinite(rotation)) throw DomainError("rotation must be finite");
  return MapExpr(Node{Automorphism{a, rotation}});
}

MapExpr MapExpr::rotation(double angle) { return automorphism(DiskPoint{}, angle); }

MapExpr MapExpr::pick(double alpha) {
  check_alpha(alpha);
  return MapExpr(Node{PickMap{alpha}});
}

MapExpr MapExpr::square() { return MapExpr(Node{SquareMap{}}); }

MapExpr MapExpr::compose(std::vector<MapExpr> maps) {
  if (maps.size() == 1) return maps.front();
  return MapExpr(Node{Compose{std::move(maps)}});
}

MapExpr MapExpr::inverse() const {
  if (const auto* inv = std::get_if<Inverse>(node_.get())) return inv->of;
  return MapExpr(Node{Inverse{*this}});
}

MapExpr MapExpr::then(const MapExpr& next) const { return compose({*this, next}); }

bool MapExpr::is_univalent() const {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SquareMap>) {
          return false;
        } else if constexpr (std::is_same_v<T, Inverse>) {
          return n.of.is_univalent();
        } else if constexpr (std::is_same_v<T, Compose>) {
          for (const auto& m : n.maps) {
            if (!m.is_univalent()) return false;
          }
          return true;
        } else {
          return true;
        }
      },
      *node_);
}

Complex MapExpr::eval(Complex p) const {
  return std::visit(
      [p](const auto& n) -> Complex {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NormalizedMoebius>) {
          const Complex z = n.base.value();
          return automorphism_eval(z, moebius_factor(z), p);
        } else if constexpr (std::is_same_v<T, Automorphism>) {
          return automorphism_eval(n.a.value(), std::polar(1.0, n.rotation), p);
        } else if constexpr (std::is_same_v<T, PickMap>) {
          return pick_eval(n.alpha, p);
        } else if constexpr (std::is_same_v<T, SquareMap>) {
          return p * p;
        } else if constexpr (std::is_same_v<T, Inverse>) {
          return n.of.inverse_eval(p);
        } else {
          Complex x = p;
          for (const auto& m : n.maps) x = m.eval(x);
          return x;
        }
      },
      *node_);
}

Complex MapExpr::deriv(Complex p) const {
  return std::visit(
      [p](const auto& n) -> Complex {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NormalizedMoebius>) {
          const Complex z = n.base.value();
          return automorphism_deriv(z, moebius_factor(z), p);
        } else if constexpr (std::is_same_v<T, Automorphism>) {
          return automorphism_deriv(n.a.value(), std::polar(1.0, n.rotation), p);
        } else if constexpr (std::is_same_v<T, PickMap>) {
          return pick_deriv(n.alpha, p);
        } else if constexpr (std::is_same_v<T, SquareMap>) {
          return 2.0 * p;
        } else if constexpr (std::is_same_v<T, Inverse>) {
          return 1.0 / n.of.deriv(n.of.inverse_eval(p));
        } else {
          Complex x = p;
          Complex d = 1.0;
          for (const auto& m : n.maps) {
            d *= m.deriv(x);
            x = m.eval(x);
          }
          return d;
        }
      },
      *node_);
}

Complex MapExpr::inverse_eval(Complex w) const {
  return std::visit(
      [w](const auto& n) -> Complex {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NormalizedMoebius>) {
          const Complex z = n.base.value();
          return automorphism_inverse(z, moebius_factor(z), w);
        } else if constexpr (std::is_same_v<T, Automorphism>) {
          return automorphism_inverse(n.a.value(), std::polar(1.0, n.rotation), w);
        } else if constexpr (std::is_same_v<T, PickMap>) {
          return pick_inverse(n.alpha, w);
        } else if constexpr (std::is_same_v<T, SquareMap>) {
          throw RangeError("the square map has no single-valued inverse");
        } else if constexpr (std::is_same_v<T, Inverse>) {
          return n.of.eval(w);
        } else {
          Complex x = w;
          for (auto it = n.maps.rbegin(); it != n.maps.rend(); ++it) x = it->inverse_eval(x);
          return x;
        }
      },
      *node_);
}

DiskPoint map_eval(const MapExpr& expr, DiskPoint point) {
  const Complex w = expr.eval(point.value());
  if (!(std::abs(w) < 1.0)) throw NumericalError("image left the unit disk");
  return DiskPoint{w};
}

Complex map_deriv(const MapExpr& expr, DiskPoint point) { return expr.deriv(point.value()); }

DiskPoint map_inverse_eval(const MapExpr& expr, DiskPoint image) {
  const Complex z = expr.inverse_eval(image.value());
  if (!(std::abs(z) < 1.0)) throw RangeError("preimage is not inside the unit disk");
  return DiskPoint{z};
}

namespace {

void describe_into(std::ostringstream& os, const MapExpr& expr) {
  std::visit(
      [&os](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        auto c = [&os](Complex z) { os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i"; };
        if constexpr (std::is_same_v<T, NormalizedMoebius>) {
          os << "B(";
          c(n.base.value());
          os << ")";
        } else if constexpr (std::is_same_v<T, Automorphism>) {
          os << "aut(";
          c(n.a.value());
          os << ", " << n.rotation << ")";
        } else if constexpr (std::is_same_v<T, PickMap>) {
          os << "pick(" << n.alpha << ")";
        } else if constexpr (std::is_same_v<T, SquareMap>) {
          os << "square";
        } else if constexpr (std::is_same_v<T, MapExpr::Inverse>) {
          os << "inv(";
          describe_into(os, n.of);
          os << ")";
        } else {
          if (n.maps.empty()) {
            os << "id";
            return;
          }
          os << "[";
          for (std::size_t i = 0; i < n.maps.size(); ++i) {
            if (i) os << " ; ";
            describe_into(os, n.maps[i]);
          }
          os << "]";
        }
      },
      expr.node());
}

}  // namespace

std::string describe(const MapExpr& expr) {
  std::ostringstream os;
  os.precision(6);
  describe_into(os, expr);
  return os.str();
}

}  // namespace digon
