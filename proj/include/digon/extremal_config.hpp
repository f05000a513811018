#pragma once

// Extremal configuration for n fixed boundary points: the zeros e^{i delta_k}
// of the quadratic differential
//
//   Q(zeta) dzeta^2 = A prod_k (zeta - e^{i delta_k})^2 / (zeta^2 prod_k (zeta - zeta_k)^2) dzeta^2,
//
// with A = 1/(4 pi^2), found as the roots of the monic polynomial
//
//   P(zeta) = prod_k (zeta - zeta_k) + 2 sum_k alpha_k zeta_k prod_{l != k} (zeta - zeta_l),
//
// plus the strip maps g_j onto C \ [0, inf).

#include <optional>
#include <vector>

#include "json.hpp"

#include "digon/polynomial.hpp"
#include "digon/types.hpp"

namespace digon {

struct BoundaryAnchorSet {
  std::vector<double> angles;  // strictly increasing, in [0, 2 pi)
  std::vector<double> betas;   // empty, or one positive angular derivative per anchor

  /// Validates ordering, range and betas; throws InputError.
  static BoundaryAnchorSet make(std::vector<double> angles, std::vector<double> betas = {});

  std::size_t size() const { return angles.size(); }
  bool has_betas() const { return !betas.empty(); }
  Complex point(std::size_t j) const { return std::polar(1.0, angles[j]); }
};

struct HeightVector {
  std::vector<double> alphas;  // nonnegative, sum 1

  static constexpr double kSumTolerance = 1e-14;
  static HeightVector make(std::vector<double> alphas);

  std::size_t size() const { return alphas.size(); }
};

struct ExtremalConfig {
  BoundaryAnchorSet anchors;
  HeightVector heights;
  // delta_k lies in [theta_k, theta_{k+1}] with theta_{n+1} = theta_1 + 2 pi; the
  // last one may exceed 2 pi. Anchors with alpha_k = 0 carry delta_k = theta_k.
  std::vector<double> deltas;
  double coefficient_A = 1.0 / (4.0 * kPi * kPi);
  double max_root_modulus_deviation = 0.0;  // before projection onto the circle

  std::size_t size() const { return anchors.size(); }
  std::vector<std::size_t> active() const;
  Complex zero(std::size_t k) const { return std::polar(1.0, deltas[k]); }
};

/// P(zeta) over the anchors with positive height.
ComplexPoly extremal_polynomial(const BoundaryAnchorSet& anchors, const HeightVector& heights);

ExtremalConfig solve_deltas(const BoundaryAnchorSet& anchors, const HeightVector& heights);

struct ResidueReport {
  std::vector<double> residuals;   // |2 alpha_j - RHS_j|
  std::vector<double> rhs_imag;    // |Im RHS_j|
  bool rhs_real_positive = true;   // Im RHS < 1e-10 and Re RHS > 0 wherever alpha_j > 0
  double max_residual() const;
};

ResidueReport residue_check(const ExtremalConfig& config);

/// sum_k (delta_k - theta_k); equals pi for a solved configuration.
double delta_theta_sum(const ExtremalConfig& config);

/// Q(point); throws DomainError at the poles 0 and zeta_j.
Complex q_eval(const ExtremalConfig& config, Complex point);

/// The branch (1/zeta - 2 sum_k alpha_k/(zeta - zeta_k)) / (2 pi) of sqrt(Q).
Complex q_sqrt(const ExtremalConfig& config, Complex point);

struct StripMap {
  ExtremalConfig config;
  std::size_t index = 0;
  double kappa = 0.0;           // rotation e^{i kappa}, in [0, 2 pi)
  double base_direction = 0.0;  // direction at 0 bisecting the sector of D_j*
  double base_radius = 0.25;
};

/// Arrival direction at 0 of the critical trajectory ending at e^{i delta_k} (mod 2 pi).
double critical_direction(const ExtremalConfig& config, std::size_t k);

StripMap make_strip_map(const ExtremalConfig& config, std::size_t j);

/// g_j(zeta) = e^{i kappa} zeta^{1/alpha_j} prod_k (zeta - zeta_k)^{-2 alpha_k / alpha_j},
/// branch tracked along the segment from the base point. Throws DomainError when
/// the segment runs through a vertex.
Complex strip_map_eval(const StripMap& strip, Complex point);

/// g_j'/g_j, single valued.
Complex strip_map_log_derivative(const StripMap& strip, Complex point);

nlohmann::json config_to_json(const ExtremalConfig& config);
/// Re-solves from "theta" and "alpha"; a stored "delta" must agree to 1e-9.
ExtremalConfig config_from_json(const nlohmann::json& j);

}  // namespace digon
