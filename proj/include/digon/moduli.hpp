#pragma once

// Reduced moduli of digons: the change-of-variable rules, the closed forms
// for the extremal strip domains, and the weighted sum over a partition.

#include <span>
#include <string>
#include <utility>
#include <variant>

#include "digon/extremal_config.hpp"

namespace digon {

/// Two readings of the general-position moduli and the bounds built on them.
/// AsPrinted keeps the formulas as stated; DerivedConsistent applies the
/// change-of-variable rule mechanically with the inverse Moebius map.
enum class Variant { AsPrinted, DerivedConsistent };

std::string to_string(Variant v);
/// Accepts "as_printed" / "derived_consistent"; throws InputError otherwise.
Variant variant_from_string(const std::string& s);

struct DigonVertexSpec {
  std::variant<DiskPoint, CirclePoint> location;
  double inner_angle = kPi;  // in (0, 2 pi]
};

struct DigonModulus {
  double value = 0.0;
  DigonVertexSpec a;
  DigonVertexSpec b;
  Variant variant = Variant::DerivedConsistent;
};

/// Leading coefficients of f at the two vertices:
/// f(z) = w1 + (z - a)^{psi_a/phi_a} (c1 + ...),  f(z) = w2 + (z - b)^{psi_b/phi_b} (d1 + ...).
struct ExpansionCoefficients {
  Complex c1;
  Complex d1;
  double exponent_a = 1.0;
  double exponent_b = 1.0;
};

/// m + (1/psi_a) log|f'(a)| + (1/psi_b) log|f'(b)|.
DigonModulus change_of_variable(const DigonModulus& m, std::pair<double, double> angles,
                                std::pair<double, double> derivs);

/// m + (1/psi_a) log|c1| + (1/psi_b) log|d1|.
DigonModulus change_of_variable_expansion(const DigonModulus& m, std::pair<double, double> image_angles,
                                          const ExpansionCoefficients& coeffs);

/// The digon G = U \ (-1, 0] with vertices 0 and 1: reduced modulus 0.
DigonModulus slit_disk_baseline();

/// m(D_j*, 0_j, zeta_j) = (1/(alpha_j pi)) sum_{k != j} alpha_k log|zeta_j - zeta_k|; 0 when alpha_j = 0.
double reduced_modulus_origin(const BoundaryAnchorSet& anchors, const HeightVector& heights, std::size_t j);
double reduced_modulus_origin(const ExtremalConfig& config, std::size_t j);

/// m(D_j*, z_j, zeta_j) in closed form, in either reading.
double reduced_modulus_general(const BoundaryAnchorSet& anchors, const HeightVector& heights, Complex z,
                               std::size_t j, Variant variant);
double reduced_modulus_general(const ExtremalConfig& config, Complex z, std::size_t j, Variant variant);

/// DerivedConsistent m(D_j*, z_j, zeta_j) obtained the long way: move the
/// anchors by M(zeta) = (zeta - z)/(1 - zeta conj z), take the origin modulus of
/// the moved configuration, and transfer it back with change_of_variable
/// through M^{-1} (derivatives 1 - |z|^2 at 0 and |1 - zeta_j conj z|^2/(1 - |z|^2)
/// at M(zeta_j)).
double reduced_modulus_by_transfer(const BoundaryAnchorSet& anchors, const HeightVector& heights, Complex z,
                                   std::size_t j);

/// sum_j alpha_j^2 m_j.
double weighted_sum(const HeightVector& heights, std::span<const double> moduli);
double weighted_sum(const ExtremalConfig& config, std::span<const double> moduli);

}  // namespace digon
