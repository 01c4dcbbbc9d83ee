#pragma once

#include <compare>

namespace blip {

// A gray level: a real strictly inside the open interval (-1, 1).
// Zero is the neutral element (mid-gray); -1 and +1 are the unreachable
// black and white limits.
class GrayLevel {
 public:
  constexpr GrayLevel() noexcept = default;

  // Throws std::domain_error unless -1 < value < 1.
  explicit GrayLevel(double value);

  // Saturating constructor: values at or beyond +-1 land on the nearest
  // representable level strictly inside the interval. NaN is rejected.
  static GrayLevel saturate(double value);

  constexpr double value() const noexcept { return value_; }

  friend constexpr bool operator==(GrayLevel, GrayLevel) noexcept = default;
  friend constexpr auto operator<=>(GrayLevel, GrayLevel) noexcept = default;

 private:
  struct Unchecked {};
  constexpr GrayLevel(Unchecked, double value) noexcept : value_(value) {}

  double value_ = 0.0;
};

// Largest gray level below +1; its negation is the smallest above -1.
GrayLevel max_gray() noexcept;

// A coordinate of the isomorphic real line. Always finite.
class LogCoord {
 public:
  constexpr LogCoord() noexcept = default;

  // Throws std::domain_error on NaN or infinity.
  explicit LogCoord(double value);

  constexpr double value() const noexcept { return value_; }

  friend constexpr bool operator==(LogCoord, LogCoord) noexcept = default;
  friend constexpr auto operator<=>(LogCoord, LogCoord) noexcept = default;

 private:
  double value_ = 0.0;
};

// Isomorphism onto the real line: arctanh(v).
LogCoord phi(GrayLevel v) noexcept;

// Inverse isomorphism: tanh(x), saturated into the open interval.
GrayLevel phi_inv(LogCoord x) noexcept;

// Logarithmic addition (v1 + v2) / (1 + v1 v2).
GrayLevel gadd(GrayLevel v1, GrayLevel v2) noexcept;

// Logarithmic subtraction (v1 - v2) / (1 - v1 v2).
GrayLevel gsub(GrayLevel v1, GrayLevel v2) noexcept;

GrayLevel gneg(GrayLevel v) noexcept;

// Real-scalar multiplication, computed as tanh(lambda * arctanh(v)).
// lambda must be finite.
GrayLevel gscale(double lambda, GrayLevel v) noexcept;

// Scalar product phi(v1) * phi(v2) and the induced norm |phi(v)|.
double gdot(GrayLevel v1, GrayLevel v2) noexcept;
double gnorm(GrayLevel v) noexcept;

// Ordinary magnitude of the gray value; used by the absolute contrast.
GrayLevel gabs(GrayLevel v) noexcept;

namespace detail {

// tanh of an arbitrary (possibly infinite) real, saturated into (-1, 1).
double tanh_saturated(double x) noexcept;

// arctanh via the difference of log1p terms.
double arctanh(double v) noexcept;

}  // namespace detail

}  // namespace blip
