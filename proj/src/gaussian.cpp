#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "blip/raster.hpp"

namespace blip {

namespace {

std::vector<double> gaussian_kernel(double sigma) {
  const auto radius = static_cast<std::ptrdiff_t>(std::ceil(3.0 * sigma));
  std::vector<double> w(static_cast<std::size_t>(2 * radius + 1));
  double total = 0.0;
  for (std::ptrdiff_t k = -radius; k <= radius; ++k) {
    const double kk = static_cast<double>(k);
    w[static_cast<std::size_t>(k + radius)] = std::exp(-kk * kk / (2.0 * sigma * sigma));
  }
  for (double x : w) total += x;
  for (double& x : w) x /= total;
  return w;
}

// Separable blur of a scalar field. Each output is written as the centre
// value plus weighted differences, so constant neighbourhoods stay exact.
std::vector<double> blur_field(const std::vector<double>& field, std::size_t width,
                               std::size_t height, const std::vector<double>& kernel) {
  const auto radius = static_cast<std::ptrdiff_t>(kernel.size() / 2);
  const auto clamp_index = [](std::ptrdiff_t i, std::size_t n) {
    return static_cast<std::size_t>(
        std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(n) - 1));
  };

  std::vector<double> tmp(field.size());
  parallel::for_rows(height, [&](std::size_t, std::size_t y0, std::size_t y1) {
    for (std::size_t y = y0; y < y1; ++y) {
      for (std::size_t x = 0; x < width; ++x) {
        const double c = field[y * width + x];
        double acc = 0.0;
        for (std::ptrdiff_t k = -radius; k <= radius; ++k) {
          const std::size_t xs = clamp_index(static_cast<std::ptrdiff_t>(x) + k, width);
          acc += kernel[static_cast<std::size_t>(k + radius)] * (field[y * width + xs] - c);
        }
        tmp[y * width + x] = c + acc;
      }
    }
  });

  std::vector<double> out(field.size());
  parallel::for_rows(height, [&](std::size_t, std::size_t y0, std::size_t y1) {
    for (std::size_t y = y0; y < y1; ++y) {
      for (std::size_t x = 0; x < width; ++x) {
        const double c = tmp[y * width + x];
        double acc = 0.0;
        for (std::ptrdiff_t k = -radius; k <= radius; ++k) {
          const std::size_t ys = clamp_index(static_cast<std::ptrdiff_t>(y) + k, height);
          acc += kernel[static_cast<std::size_t>(k + radius)] * (tmp[ys * width + x] - c);
        }
        out[y * width + x] = c + acc;
      }
    }
  });
  return out;
}

std::vector<GrayLevel> blur_channel(std::span<const GrayLevel> in, std::size_t width,
                                    std::size_t height, const std::vector<double>& kernel) {
  std::vector<double> field(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) field[i] = phi(in[i]).value();
  const auto blurred = blur_field(field, width, height, kernel);
  std::vector<GrayLevel> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    out[i] = GrayLevel::saturate(detail::tanh_saturated(blurred[i]));
  }
  return out;
}

}  // namespace

ImagePlane gaussian_correction(const ImagePlane& f, double sigma) {
  if (!(std::isfinite(sigma) && sigma > 0.0)) {
    throw std::invalid_argument("sigma must be a positive finite number");
  }
  const auto kernel = gaussian_kernel(sigma);
  const std::size_t w = f.width();
  const std::size_t h = f.height();
  if (f.kind() == Kind::gray) {
    return ImagePlane(w, h, blur_channel(f.gray(), w, h, kernel));
  }

  const auto in = f.color();
  std::vector<GrayLevel> r(in.size()), g(in.size()), b(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    r[i] = in[i].r;
    g[i] = in[i].g;
    b[i] = in[i].b;
  }
  r = blur_channel(r, w, h, kernel);
  g = blur_channel(g, w, h, kernel);
  b = blur_channel(b, w, h, kernel);
  std::vector<ColorVec> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = {r[i], g[i], b[i]};
  return ImagePlane(w, h, std::move(out));
}

}  // namespace blip
