#include "blip/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace blip::synthetic {

namespace {

// Field in (-1, 1): diagonal ramp, a few Gaussian blobs, and noise.
std::vector<GrayLevel> scene_field(std::size_t width, std::size_t height, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 0.04);

  struct Blob {
    double cx, cy, radius, amplitude;
  };
  std::vector<Blob> blobs(4);
  for (auto& b : blobs) {
    b = {unit(rng) * static_cast<double>(width), unit(rng) * static_cast<double>(height),
         (0.08 + 0.2 * unit(rng)) * static_cast<double>(std::max(width, height)),
         unit(rng) < 0.5 ? -1.2 : 1.2};
  }
  const double tilt = 2.0 * std::numbers::pi * unit(rng);

  std::vector<GrayLevel> out(width * height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double u = (static_cast<double>(x) + 0.5) / static_cast<double>(width) - 0.5;
      const double v = (static_cast<double>(y) + 0.5) / static_cast<double>(height) - 0.5;
      double s = 1.5 * (u * std::cos(tilt) + v * std::sin(tilt));
      for (const auto& b : blobs) {
        const double dx = static_cast<double>(x) - b.cx;
        const double dy = static_cast<double>(y) - b.cy;
        s += b.amplitude * std::exp(-(dx * dx + dy * dy) / (2.0 * b.radius * b.radius));
      }
      s += noise(rng);
      out[y * width + x] = GrayLevel::saturate(std::tanh(s));
    }
  }
  return out;
}

}  // namespace

RasterBuffer gray_scene(std::size_t width, std::size_t height, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return from_model(ImagePlane(width, height, scene_field(width, height, rng)));
}

RasterBuffer color_scene(std::size_t width, std::size_t height, std::uint64_t seed,
                         const ColorVec& cast) {
  std::mt19937_64 rng(seed);
  const auto r = scene_field(width, height, rng);
  const auto g = scene_field(width, height, rng);
  const auto b = scene_field(width, height, rng);
  std::vector<ColorVec> samples(width * height);
  for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = cadd({r[i], g[i], b[i]}, cast);
  return from_model(ImagePlane(width, height, std::move(samples)));
}

RasterBuffer gray_step(std::size_t width, std::size_t height, std::uint8_t top,
                       std::uint8_t bottom) {
  RasterBuffer r{width, height, 1, std::vector<std::uint8_t>(width * height, bottom)};
  for (std::size_t i = 0; i < width * (height / 2); ++i) r.pixels[i] = top;
  return r;
}

}  // namespace blip::synthetic
