#pragma once

#include "blip/gray.hpp"

namespace blip {

// A point of the color cube (-1, 1)^3, one gray level per channel.
struct ColorVec {
  GrayLevel r;
  GrayLevel g;
  GrayLevel b;

  friend constexpr bool operator==(const ColorVec&, const ColorVec&) noexcept = default;
};

// Channelwise lifts of the gray operations.
ColorVec cadd(const ColorVec& v1, const ColorVec& v2) noexcept;
ColorVec csub(const ColorVec& v1, const ColorVec& v2) noexcept;
ColorVec cneg(const ColorVec& v) noexcept;
ColorVec cscale(double lambda, const ColorVec& v) noexcept;

// Sum of channel scalar products, and its square root.
double cdot(const ColorVec& v1, const ColorVec& v2) noexcept;
double cnorm(const ColorVec& v) noexcept;

// (c, c, c). The only sanctioned way to mix gray constants into color work.
constexpr ColorVec broadcast_gray(GrayLevel c) noexcept { return {c, c, c}; }

}  // namespace blip
