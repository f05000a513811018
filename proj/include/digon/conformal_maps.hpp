#pragma once

// Closed-form self-maps of the unit disk and their compositions.
//
// A MapExpr is an immutable composition tree. Leaves are disk automorphisms
// (the normalized B_z or a general e^{i rho}(z - a)/(1 - conj(a) z)), Pick
// slit maps p_alpha, and the non-univalent square z^2 used as a witness.
// Interior nodes are formal inverses and compositions. Evaluation,
// derivatives (exact chain rule) and inverse evaluation are all closed form.

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "digon/types.hpp"

namespace digon {

/// Koebe function k(z) = z / (1 - z)^2.
Complex koebe(Complex z);
/// k'(z) = (1 + z) / (1 - z)^3.
Complex koebe_deriv(Complex z);

/// The normalized Moebius map B_z(zeta) = ((1 - conj z)/(1 - z)) (zeta - z)/(1 - zeta conj z).
/// Sends z to 0 and fixes 1.
struct NormalizedMoebius {
  DiskPoint base;
};

/// e^{i rotation} (zeta - a) / (1 - conj(a) zeta).
struct Automorphism {
  DiskPoint a;
  double rotation = 0.0;
};

/// Pick map: fixes 0, p'(0) = alpha, onto U minus (-1, -alpha/(1+sqrt(1-alpha))^2].
struct PickMap {
  double alpha = 1.0;
};

/// zeta -> zeta^2. Not univalent; only for the non-univalence witness.
struct SquareMap {};

NormalizedMoebius b_normalized(DiskPoint z);

/// Left endpoint magnitude of the omitted slit of p_alpha: alpha / (1 + sqrt(1 - alpha))^2.
double pick_slit_tip(double alpha);

/// Closed-form Pick evaluation by the explicit square-root formula.
/// Only safe on the real segment (-1, 1); kept as a cross-check.
double pick_printed_formula(double alpha, double x);

class MapExpr {
 public:
  struct Inverse;
  struct Compose;
  using Node = std::variant<NormalizedMoebius, Automorphism, PickMap, SquareMap, Inverse, Compose>;

  MapExpr();  // identity

  static MapExpr identity();
  static MapExpr moebius(DiskPoint base);
  static MapExpr automorphism(DiskPoint a, double rotation);
  static MapExpr rotation(double angle);
  static MapExpr pick(double alpha);
  static MapExpr square();
  /// Applies `maps` in order: the first element acts first.
  static MapExpr compose(std::vector<MapExpr> maps);

  MapExpr inverse() const;
  /// this, then `next`.
  MapExpr then(const MapExpr& next) const;

  const Node& node() const;

  /// False if any leaf is the square map.
  bool is_univalent() const;

  // Unchecked kernels; callers guarantee |point| < 1.
  Complex eval(Complex point) const;
  Complex deriv(Complex point) const;
  Complex inverse_eval(Complex image) const;

 private:
  explicit MapExpr(Node node);
  std::shared_ptr<const Node> node_;
};

struct MapExpr::Inverse {
  MapExpr of;
};

struct MapExpr::Compose {
  std::vector<MapExpr> maps;
};

inline const MapExpr::Node& MapExpr::node() const { return *node_; }

DiskPoint map_eval(const MapExpr& expr, DiskPoint point);
Complex map_deriv(const MapExpr& expr, DiskPoint point);
DiskPoint map_inverse_eval(const MapExpr& expr, DiskPoint image);

/// Human-readable one-line rendering, e.g. "B(0.5+0i) ; pick(0.25) ; inv(B(0+0.3i))".
std::string describe(const MapExpr& expr);

}  // namespace digon
