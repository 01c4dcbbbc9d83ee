#include "blip/color.hpp"

#include <cmath>

namespace blip {

ColorVec cadd(const ColorVec& v1, const ColorVec& v2) noexcept {
  return {gadd(v1.r, v2.r), gadd(v1.g, v2.g), gadd(v1.b, v2.b)};
}

ColorVec csub(const ColorVec& v1, const ColorVec& v2) noexcept {
  return {gsub(v1.r, v2.r), gsub(v1.g, v2.g), gsub(v1.b, v2.b)};
}

ColorVec cneg(const ColorVec& v) noexcept {
  return {gneg(v.r), gneg(v.g), gneg(v.b)};
}

ColorVec cscale(double lambda, const ColorVec& v) noexcept {
  return {gscale(lambda, v.r), gscale(lambda, v.g), gscale(lambda, v.b)};
}

double cdot(const ColorVec& v1, const ColorVec& v2) noexcept {
  return gdot(v1.r, v2.r) + gdot(v1.g, v2.g) + gdot(v1.b, v2.b);
}

double cnorm(const ColorVec& v) noexcept { return std::sqrt(cdot(v, v)); }

}  // namespace blip
