#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace digon {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Error hierarchy. Every library failure is one of these; the CLI maps
// them to exit status 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Value not attained by a map (e.g. a point on an omitted slit).
class RangeError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent input data (lengths, sums, orderings).
class InputError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure failed to meet its own postconditions.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A point of the open unit disk.
class DiskPoint {
 public:
  DiskPoint() = default;
  explicit DiskPoint(Complex value) : value_(value) {
    if (!(std::abs(value) < 1.0)) {
      throw DomainError("point is not inside the open unit disk");
    }
  }
  DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

  Complex value() const { return value_; }
  double abs() const { return std::abs(value_); }

 private:
  Complex value_{0.0, 0.0};
};

/// A point e^{i angle} of the unit circle; angle normalized to [0, 2pi).
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(double angle) : angle_(normalize(angle)) {}

  double angle() const { return angle_; }
  Complex value() const { return std::polar(1.0, angle_); }

  static double normalize(double angle) {
    if (!std::isfinite(angle)) throw DomainError("angle is not finite");
    double t = std::fmod(angle, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
  }

 private:
  double angle_ = 0.0;
};

/// Deterministic splitmix64 generator. Draws avoid the implementation-defined
/// <random> distributions, so sequences are identical on every toolchain.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  /// Uniform in the disk of the given radius.
  Complex in_disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, uniform(0.0, kTwoPi));
  }

 private:
  std::uint64_t state_;
};

}  // namespace digon
