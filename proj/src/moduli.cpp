#include "digon/moduli.hpp"

#include <algorithm>
#include <numeric>

namespace digon {

std::string to_string(Variant v) {
  return v == Variant::AsPrinted ? "as_printed" : "derived_consistent";
}

Variant variant_from_string(const std::string& s) {
  if (s == "as_printed") return Variant::AsPrinted;
  if (s == "derived_consistent") return Variant::DerivedConsistent;
  throw InputError("unknown bound variant \"" + s + "\"");
}

namespace {

void check_angle(double psi) {
  if (!(psi > 0.0 && psi <= kTwoPi)) throw InputError("vertex angle must lie in (0, 2 pi]");
}

double checked_log_abs(double x) {
  const double a = std::abs(x);
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("invalid transfer: zero or infinite derivative");
  return std::log(a);
}

}  // namespace

DigonModulus change_of_variable(const DigonModulus& m, std::pair<double, double> angles,
                                std::pair<double, double> derivs) {
  check_angle(angles.first);
  check_angle(angles.second);
  DigonModulus out = m;
  out.value = m.value + checked_log_abs(derivs.first) / angles.first + checked_log_abs(derivs.second) / angles.second;
  out.a.inner_angle = angles.first;
  out.b.inner_angle = angles.second;
  return out;
}

DigonModulus change_of_variable_expansion(const DigonModulus& m, std::pair<double, double> image_angles,
                                          const ExpansionCoefficients& coeffs) {
  check_angle(image_angles.first);
  check_angle(image_angles.second);
  DigonModulus out = m;
  out.value = m.value + checked_log_abs(std::abs(coeffs.c1)) / image_angles.first +
              checked_log_abs(std::abs(coeffs.d1)) / image_angles.second;
  out.a.inner_angle = image_angles.first;
  out.b.inner_angle = image_angles.second;
  return out;
}

DigonModulus slit_disk_baseline() {
  DigonModulus m;
  m.value = 0.0;
  m.a = {DiskPoint{}, kTwoPi};
  m.b = {CirclePoint{0.0}, kPi};
  return m;
}

double reduced_modulus_origin(const BoundaryAnchorSet& anchors, const HeightVector& heights, std::size_t j) {
  if (anchors.size() != heights.size()) throw InputError("anchors and heights differ in length");
  if (j >= anchors.size()) throw InputError("digon index out of range");
  const double aj = heights.alphas[j];
  if (aj == 0.0) return 0.0;
  double acc = 0.0;
  for (std::size_t k = 0; k < anchors.size(); ++k) {
    if (k != j && heights.alphas[k] > 0.0) {
      acc += heights.alphas[k] * std::log(std::abs(anchors.point(j) - anchors.point(k)));
    }
  }
  return acc / (aj * kPi);
}

double reduced_modulus_origin(const ExtremalConfig& config, std::size_t j) {
  return reduced_modulus_origin(config.anchors, config.heights, j);
}

double reduced_modulus_general(const BoundaryAnchorSet& anchors, const HeightVector& heights, Complex z,
                               std::size_t j, Variant variant) {
  if (anchors.size() != heights.size()) throw InputError("anchors and heights differ in length");
  if (j >= anchors.size()) throw InputError("digon index out of range");
  if (!(std::abs(z) < 1.0)) throw DomainError("z must lie in the unit disk");
  const double aj = heights.alphas[j];
  if (aj == 0.0) return 0.0;

  auto moved = [z](Complex zeta) { return (zeta - z) / (1.0 - zeta * std::conj(z)); };
  const Complex zj = anchors.point(j);
  double log_product = 0.0;
  for (std::size_t k = 0; k < anchors.size(); ++k) {
    if (k != j && heights.alphas[k] > 0.0) {
      log_product += heights.alphas[k] * std::log(std::abs(moved(zj) - moved(anchors.point(k))));
    }
  }
  const double log_disk = std::log(1.0 - std::norm(z));
  const double log_anchor = std::log(std::abs(1.0 - zj * std::conj(z)));

  double log_total = 0.0;
  if (variant == Variant::AsPrinted) {
    log_total = (aj + 0.5) * log_disk - 2.0 * aj * log_anchor + log_product;
  } else {
    log_total = (0.5 - aj) * log_disk + 2.0 * aj * log_anchor + log_product;
  }
  return log_total / (aj * kPi);
}

double reduced_modulus_general(const ExtremalConfig& config, Complex z, std::size_t j, Variant variant) {
  return reduced_modulus_general(config.anchors, config.heights, z, j, variant);
}

double reduced_modulus_by_transfer(const BoundaryAnchorSet& anchors, const HeightVector& heights, Complex z,
                                   std::size_t j) {
  if (anchors.size() != heights.size()) throw InputError("anchors and heights differ in length");
  if (j >= anchors.size()) throw InputError("digon index out of range");
  if (!(std::abs(z) < 1.0)) throw DomainError("z must lie in the unit disk");
  const double aj = heights.alphas[j];
  if (aj == 0.0) return 0.0;

  // Anchors moved by M, re-sorted into ascending angle order.
  const std::size_t n = anchors.size();
  std::vector<double> angles(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex zeta = anchors.point(k);
    angles[k] = CirclePoint::normalize(std::arg((zeta - z) / (1.0 - zeta * std::conj(z))));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return angles[a] < angles[b]; });
  std::vector<double> sorted_angles;
  std::vector<double> sorted_alphas;
  std::size_t moved_j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sorted_angles.push_back(angles[order[i]]);
    sorted_alphas.push_back(heights.alphas[order[i]]);
    if (order[i] == j) moved_j = i;
  }
  const auto moved_anchors = BoundaryAnchorSet::make(sorted_angles);
  const HeightVector moved_heights{sorted_alphas};

  DigonModulus origin;
  origin.value = reduced_modulus_origin(moved_anchors, moved_heights, moved_j);
  origin.a = {DiskPoint{}, kTwoPi * aj};
  origin.b = {CirclePoint{sorted_angles[moved_j]}, kPi};

  const Complex zj = anchors.point(j);
  const double disk_norm = 1.0 - std::norm(z);
  const double deriv_at_zero = disk_norm;                                            // |(M^{-1})'(0)|
  const double deriv_at_anchor = std::norm(1.0 - zj * std::conj(z)) / disk_norm;   // |(M^{-1})'(M(zeta_j))|
  return change_of_variable(origin, {kTwoPi * aj, kPi}, {deriv_at_zero, deriv_at_anchor}).value;
}

double weighted_sum(const HeightVector& heights, std::span<const double> moduli) {
  if (moduli.size() != heights.size()) throw InputError("one modulus per digon is required");
  double acc = 0.0;
  for (std::size_t j = 0; j < moduli.size(); ++j) acc += heights.alphas[j] * heights.alphas[j] * moduli[j];
  return acc;
}

double weighted_sum(const ExtremalConfig& config, std::span<const double> moduli) {
  return weighted_sum(config.heights, moduli);
}

}  // namespace digon
