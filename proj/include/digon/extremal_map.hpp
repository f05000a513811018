#pragma once

// Extremal functions: the closed-form one-point extremal B_w^{-1} o p_alpha o B_z
// and the n-point extremal fixing 0, obtained by integrating
//
//   dw/dzeta = w prod(zeta - e^{i delta_j}) prod(w - zeta_k) / (zeta prod(w - e^{i delta_j}) prod(zeta - zeta_k))
//
// along rays from a series seed w = c zeta (1 + w1 zeta + w2 zeta^2).

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "digon/angular.hpp"
#include "digon/conformal_maps.hpp"
#include "digon/extremal_config.hpp"
#include "digon/ode.hpp"

namespace digon {

/// A ray was not integrated far enough (or was truncated) for a boundary measurement.
class InsufficientDataError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// B_w^{-1} o p_alpha o B_z with alpha from alpha_star_relation(z, w, beta). Verifies
/// phi(z) = w to 1e-12, the measured angular derivative at 1 against beta to 1e-6
/// and |phi'(z)| against the DerivedConsistent one-point bound to 1e-9.
MapExpr extremal_theorem_a(DiskPoint z, DiskPoint w, double beta);

struct RaySample {
  double r = 0.0;
  Complex zeta;
  Complex w;
  double step = 0.0;
  double qd_residual = 0.0;  // |Q(zeta) - Q(w) w'^2| / (|Q(zeta)| + |Q(w)| |w'|^2)
};

struct Ray {
  double angle = 0.0;
  std::vector<RaySample> samples;
  bool truncated = false;
  double last_good_radius = 0.0;
  std::string reason;
};

struct SampledMap {
  std::vector<Ray> rays;
  double origin_slope = 1.0;
  ExtremalConfig config;
  int finest_level = 0;  // checkpoints r = 1 - 2^{-m} for m = 3..finest_level

  double max_qd_residual() const;
};

struct ExtremalOdeOptions {
  double r0 = 1e-3;
  int finest_level = 16;
  OdeOptions ode{};
};

/// K(x) = x prod_k (1 - x conj(zeta_k))^{-2 alpha_k}; the extremal satisfies K(w) = c K(zeta).
Complex extremal_invariant(const ExtremalConfig& config, Complex x);

/// Seed w = c zeta (1 + w1 zeta + w2 zeta^2) from the expansion of the ODE at 0.
Complex extremal_series(const ExtremalConfig& config, double c, Complex zeta);

/// dw/dzeta at (zeta, w).
Complex extremal_slope(const ExtremalConfig& config, Complex zeta, Complex w);

/// Checkpoint radius for level m: 1 - 2^{-m}.
double level_radius(int m);

/// Angles of the anchors with positive height.
std::vector<double> anchor_ray_angles(const ExtremalConfig& config);

/// Integrates each ray from r0 to r_max. Rays stop early (truncated) when the
/// step size collapses; |w| >= 1 at an accepted step throws NumericalError.
SampledMap integrate_extremal_ode(const ExtremalConfig& config, double c, std::span<const double> ray_angles,
                                  double r_max, const ExtremalOdeOptions& opts = {});

/// phi'(zeta_j) from the quotients (zeta_j - w)/(zeta_j - zeta) at the level
/// radii of the ray toward theta_j, extrapolated to r = 1.
AngularEstimate measure_beta(const SampledMap& sampled, std::size_t j);

struct EqualityReport {
  double c = 1.0;
  std::vector<double> betas;  // measured; 1 for anchors of zero height
  double product = 1.0;       // prod_j beta_j^{-2 alpha_j^2}
  double residual = 0.0;      // |c - product|
};

EqualityReport equality_audit(const ExtremalConfig& config, double c, const ExtremalOdeOptions& opts = {});
nlohmann::json equality_to_json(const EqualityReport& report);

/// The slope c in (0, 1] for which the measured phi'(zeta_j) equals target_beta,
/// by bisection in log c. Requires alpha_j > 0 and target_beta >= 1.
double solve_slope_for_beta(const ExtremalConfig& config, std::size_t j, double target_beta,
                            const ExtremalOdeOptions& opts = {});

/// Columns r, zeta_re, zeta_im, w_re, w_im, step, qd_residual.
void write_ray_csv(const Ray& ray, std::ostream& out);

}  // namespace digon
