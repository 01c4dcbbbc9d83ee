#include "blip/contrast.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "blip/error.hpp"

namespace blip {

namespace {

struct Offset {
  int dx;
  int dy;
};

constexpr std::array<Offset, 8> kNeighbors = {{
    {1, 0}, {-1, 0}, {0, 1}, {0, -1},     // 4-connected
    {1, 1}, {1, -1}, {-1, 1}, {-1, -1},   // diagonals
}};

void check_inside(const ImagePlane& f, PixelCoord p) {
  if (p.x >= f.width() || p.y >= f.height()) {
    throw std::out_of_range("pixel (" + std::to_string(p.x) + ", " +
                            std::to_string(p.y) + ") lies outside the image");
  }
}

// Contrast between two gray samples a distance d apart.
GrayLevel rel_contrast_samples(GrayLevel a, GrayLevel b, double d) noexcept {
  return gscale(1.0 / d, gsub(a, b));
}

std::size_t neighbor_count(Connectivity c) noexcept {
  return c == Connectivity::eight ? 8 : 4;
}

GrayLevel pixel_contrast_unchecked(std::span<const GrayLevel> samples, std::size_t width,
                                   std::size_t height, std::size_t x, std::size_t y,
                                   Connectivity c) noexcept {
  const GrayLevel center = samples[y * width + x];
  double phi_sum = 0.0;
  std::size_t n = 0;
  for (std::size_t k = 0; k < neighbor_count(c); ++k) {
    const auto [dx, dy] = kNeighbors[k];
    const auto nx = static_cast<std::ptrdiff_t>(x) + dx;
    const auto ny = static_cast<std::ptrdiff_t>(y) + dy;
    if (nx < 0 || ny < 0 || nx >= static_cast<std::ptrdiff_t>(width) ||
        ny >= static_cast<std::ptrdiff_t>(height)) {
      continue;
    }
    const double d = (dx != 0 && dy != 0) ? std::sqrt(2.0) : 1.0;
    const GrayLevel ca = gabs(rel_contrast_samples(
        center, samples[static_cast<std::size_t>(ny) * width + static_cast<std::size_t>(nx)], d));
    phi_sum += phi(ca).value();
    ++n;
  }
  // (1/n) <x> (sum) evaluated on the real line; n >= 1 on any image with
  // two or more pixels.
  if (n == 0) return GrayLevel{};
  return GrayLevel::saturate(detail::tanh_saturated(phi_sum / static_cast<double>(n)));
}

ImagePlane gray_contrast_map(const ImagePlane& f, ContrastMode mode, Connectivity c) {
  const std::size_t w = f.width();
  const std::size_t h = f.height();
  const auto in = f.gray();
  std::vector<GrayLevel> out(in.size());
  parallel::for_rows(h, [&](std::size_t, std::size_t y0, std::size_t y1) {
    for (std::size_t y = y0; y < y1; ++y) {
      for (std::size_t x = 0; x < w; ++x) {
        GrayLevel v{};
        switch (mode) {
          case ContrastMode::horizontal:
            if (x + 1 < w) v = rel_contrast_samples(in[y * w + x + 1], in[y * w + x], 1.0);
            break;
          case ContrastMode::vertical:
            if (y + 1 < h) v = rel_contrast_samples(in[y * w + x], in[(y + 1) * w + x], 1.0);
            break;
          case ContrastMode::pixel:
            v = pixel_contrast_unchecked(in, w, h, x, y, c);
            break;
        }
        out[y * w + x] = v;
      }
    }
  });
  return ImagePlane(w, h, std::move(out));
}

ImagePlane channel(const ImagePlane& f, GrayLevel ColorVec::*member) {
  const auto in = f.color();
  std::vector<GrayLevel> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[i].*member;
  return ImagePlane(f.width(), f.height(), std::move(out));
}

GrayLevel larger_magnitude(GrayLevel a, GrayLevel b) noexcept {
  return std::fabs(b.value()) > std::fabs(a.value()) ? b : a;
}

}  // namespace

ContrastMode parse_contrast_mode(std::string_view text) {
  if (text == "horizontal") return ContrastMode::horizontal;
  if (text == "vertical") return ContrastMode::vertical;
  if (text == "pixel") return ContrastMode::pixel;
  throw std::invalid_argument("unknown contrast mode '" + std::string(text) + "'");
}

GrayLevel rel_contrast(const ImagePlane& f, PixelCoord p1, PixelCoord p2) {
  const auto samples = f.gray();
  check_inside(f, p1);
  check_inside(f, p2);
  if (p1 == p2) throw SamePixel("relative contrast needs two distinct pixels");
  const double dx = static_cast<double>(p1.x) - static_cast<double>(p2.x);
  const double dy = static_cast<double>(p1.y) - static_cast<double>(p2.y);
  return rel_contrast_samples(samples[p1.y * f.width() + p1.x],
                              samples[p2.y * f.width() + p2.x], std::hypot(dx, dy));
}

GrayLevel abs_contrast(const ImagePlane& f, PixelCoord p1, PixelCoord p2) {
  return gabs(rel_contrast(f, p1, p2));
}

GrayLevel pixel_contrast(const ImagePlane& f, PixelCoord p, NeighborhoodSpec v) {
  const auto samples = f.gray();
  check_inside(f, p);
  if (f.pixel_count() < 2) throw DimensionTooSmall("pixel contrast needs at least 2 pixels");
  return pixel_contrast_unchecked(samples, f.width(), f.height(), p.x, p.y, v.connectivity);
}

ImagePlane contrast_map(const ImagePlane& f, ContrastMode mode, NeighborhoodSpec v) {
  if (mode == ContrastMode::horizontal && f.width() < 2) {
    throw DimensionTooSmall("horizontal contrast needs width >= 2");
  }
  if (mode == ContrastMode::vertical && f.height() < 2) {
    throw DimensionTooSmall("vertical contrast needs height >= 2");
  }
  if (mode == ContrastMode::pixel && f.pixel_count() < 2) {
    throw DimensionTooSmall("pixel contrast needs at least 2 pixels");
  }
  if (f.kind() == Kind::gray) return gray_contrast_map(f, mode, v.connectivity);

  const ImagePlane r = gray_contrast_map(channel(f, &ColorVec::r), mode, v.connectivity);
  const ImagePlane g = gray_contrast_map(channel(f, &ColorVec::g), mode, v.connectivity);
  const ImagePlane b = gray_contrast_map(channel(f, &ColorVec::b), mode, v.connectivity);
  const auto rs = r.gray();
  const auto gs = g.gray();
  const auto bs = b.gray();
  std::vector<GrayLevel> out(rs.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = larger_magnitude(larger_magnitude(rs[i], gs[i]), bs[i]);
  }
  return ImagePlane(f.width(), f.height(), std::move(out));
}

}  // namespace blip
