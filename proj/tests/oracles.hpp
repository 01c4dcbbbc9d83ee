#pragma once

// Independent reference formulas for the tests. These deliberately avoid
// the library's code paths: std::atanh / std::tanh instead of the log1p
// form, and the power form of scalar multiplication.

#include <cmath>
#include <cstdint>
#include <random>

namespace oracle {

inline double phi(double v) { return std::atanh(v); }

// Addition and subtraction evaluated on the real line.
inline double add_via_phi(double a, double b) { return std::tanh(std::atanh(a) + std::atanh(b)); }
inline double sub_via_phi(double a, double b) { return std::tanh(std::atanh(a) - std::atanh(b)); }

// ((1+v)^l - (1-v)^l) / ((1+v)^l + (1-v)^l)
inline double scale_power_form(double lambda, double v) {
  const double p = std::pow(1.0 + v, lambda);
  const double q = std::pow(1.0 - v, lambda);
  return (p - q) / (p + q);
}

// Gray level drawn uniformly from [-bound, bound].
inline double uniform_level(std::mt19937_64& rng, double bound) {
  return std::uniform_real_distribution<double>(-bound, bound)(rng);
}

}  // namespace oracle

// High-precision constants (40-digit mpmath evaluations, rounded to double).
namespace frozen {
inline constexpr double kAtanhHalf = 0.5493061443340548456976226184612628523237;
inline constexpr double kAtanhHalfSq = 0.3017372402031454944609447809623414784046;
inline constexpr double kTwoAtanhHalfSq = 0.6034744804062909889218895619246829568092;
inline constexpr double kThreeAtanhHalfSq = 0.9052117206094364833828343428870244352138;
inline constexpr double kSqrt2AtanhHalf = 0.7768361992120932239647769209277733037304;
inline constexpr double kSqrt3AtanhHalf = 0.9514261508963459657795816588169735827993;
// tanh(arctanh(0.5) / 2) = 2 - sqrt(3)
inline constexpr double kHalfScaleOfHalf = 0.2679491924311227064725536584941276330572;
inline constexpr double kAtanhOneOver256 = 0.003906269868396826053127563369707785926715;
// 3x1 field (1, 0, 0) blurred with sigma 1, radius 3, clamped borders.
inline constexpr double kBlurLeft = 0.6995251398262274457494091338593598232464;
inline constexpr double kBlurCenter = 0.3004748601737725542505908661406401767536;
inline constexpr double kBlurRight = 0.05843863079765823096325657152581747777566;
}  // namespace frozen
