#include <algorithm>
#include <cmath>

#include "blip/raster.hpp"

namespace blip {

GrayLevel code_to_level(std::uint8_t p) noexcept {
  constexpr double levels = RasterBuffer::kLevels;
  // Exact in binary floating point: numerator and 256 are small integers.
  return GrayLevel::saturate((2.0 * p + 1.0 - levels) / levels);
}

std::uint8_t level_to_code(GrayLevel v) noexcept {
  constexpr double levels = RasterBuffer::kLevels;
  const double p = std::round((v.value() * levels + levels - 1.0) / 2.0);
  return static_cast<std::uint8_t>(std::clamp(p, 0.0, double{RasterBuffer::kMaxval}));
}

ImagePlane to_model(const RasterBuffer& raster) {
  const std::size_t n = raster.width * raster.height;
  if (raster.channels == 1) {
    std::vector<GrayLevel> samples(n);
    for (std::size_t i = 0; i < n; ++i) samples[i] = code_to_level(raster.pixels[i]);
    return ImagePlane(raster.width, raster.height, std::move(samples));
  }
  std::vector<ColorVec> samples(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t* px = &raster.pixels[3 * i];
    samples[i] = {code_to_level(px[0]), code_to_level(px[1]), code_to_level(px[2])};
  }
  return ImagePlane(raster.width, raster.height, std::move(samples));
}

RasterBuffer from_model(const ImagePlane& f) {
  RasterBuffer r;
  r.width = f.width();
  r.height = f.height();
  if (f.kind() == Kind::gray) {
    r.channels = 1;
    const auto in = f.gray();
    r.pixels.resize(in.size());
    std::transform(in.begin(), in.end(), r.pixels.begin(), level_to_code);
    return r;
  }
  r.channels = 3;
  const auto in = f.color();
  r.pixels.resize(3 * in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    r.pixels[3 * i] = level_to_code(in[i].r);
    r.pixels[3 * i + 1] = level_to_code(in[i].g);
    r.pixels[3 * i + 2] = level_to_code(in[i].b);
  }
  return r;
}

RasterBuffer render_display(const ImagePlane& map, Display mode) {
  if (mode == Display::signed_values) return from_model(map);
  return from_model(map_samples(
      map, [](GrayLevel v) { return GrayLevel::saturate(2.0 * std::fabs(v.value()) - 1.0); },
      [](const ColorVec& v) {
        const auto m = [](GrayLevel c) { return GrayLevel::saturate(2.0 * std::fabs(c.value()) - 1.0); };
        return ColorVec{m(v.r), m(v.g), m(v.b)};
      }));
}

}  // namespace blip
