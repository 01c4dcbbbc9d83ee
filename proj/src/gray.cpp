#include "blip/gray.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace blip {

namespace {

constexpr double kTop = 1.0 - std::numeric_limits<double>::epsilon() / 2.0;

// Pull a finite result back inside (-1, 1). Only rounding can push it out.
inline double clamp_open(double x) noexcept {
  if (x >= 1.0) return kTop;
  if (x <= -1.0) return -kTop;
  return x;
}

}  // namespace

GrayLevel::GrayLevel(double value) : value_(value) {
  if (!(value > -1.0 && value < 1.0)) {
    throw std::domain_error("gray level must lie in (-1, 1), got " +
                            std::to_string(value));
  }
}

GrayLevel GrayLevel::saturate(double value) {
  if (std::isnan(value)) throw std::domain_error("gray level is NaN");
  return GrayLevel(Unchecked{}, clamp_open(value));
}

GrayLevel max_gray() noexcept { return GrayLevel::saturate(1.0); }

LogCoord::LogCoord(double value) : value_(value) {
  if (!std::isfinite(value)) {
    throw std::domain_error("log coordinate must be finite");
  }
}

namespace detail {

double arctanh(double v) noexcept {
  return 0.5 * (std::log1p(v) - std::log1p(-v));
}

double tanh_saturated(double x) noexcept { return clamp_open(std::tanh(x)); }

}  // namespace detail

LogCoord phi(GrayLevel v) noexcept {
  // |arctanh| of any representable level is below 19, so this is finite.
  return LogCoord(detail::arctanh(v.value()));
}

GrayLevel phi_inv(LogCoord x) noexcept {
  return GrayLevel::saturate(detail::tanh_saturated(x.value()));
}

GrayLevel gadd(GrayLevel v1, GrayLevel v2) noexcept {
  const double a = v1.value();
  const double b = v2.value();
  // 1 + ab > 0 since |ab| < 1.
  return GrayLevel::saturate((a + b) / (1.0 + a * b));
}

GrayLevel gsub(GrayLevel v1, GrayLevel v2) noexcept {
  const double a = v1.value();
  const double b = v2.value();
  return GrayLevel::saturate((a - b) / (1.0 - a * b));
}

GrayLevel gneg(GrayLevel v) noexcept { return GrayLevel::saturate(-v.value()); }

GrayLevel gscale(double lambda, GrayLevel v) noexcept {
  // The identity scalars are exact; tanh(arctanh(v)) can be off by an ulp.
  if (lambda == 1.0) return v;
  if (lambda == 0.0) return GrayLevel{};
  if (lambda == -1.0) return gneg(v);
  return GrayLevel::saturate(
      detail::tanh_saturated(lambda * detail::arctanh(v.value())));
}

double gdot(GrayLevel v1, GrayLevel v2) noexcept {
  return detail::arctanh(v1.value()) * detail::arctanh(v2.value());
}

double gnorm(GrayLevel v) noexcept {
  return std::fabs(detail::arctanh(v.value()));
}

GrayLevel gabs(GrayLevel v) noexcept {
  return GrayLevel::saturate(std::fabs(v.value()));
}

}  // namespace blip
