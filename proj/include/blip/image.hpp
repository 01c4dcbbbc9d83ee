#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "blip/color.hpp"
#include "blip/gray.hpp"
#include "blip/parallel.hpp"

namespace blip {

enum class Kind { gray, color };

std::string_view to_string(Kind kind) noexcept;

// A W x H raster of gray levels or colors, row-major. Immutable once built;
// every operation returns a new plane.
class ImagePlane {
 public:
  // Throw DimensionMismatch if width or height is zero or the sample count
  // is not width * height.
  ImagePlane(std::size_t width, std::size_t height, std::vector<GrayLevel> samples);
  ImagePlane(std::size_t width, std::size_t height, std::vector<ColorVec> samples);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return width_ * height_; }
  Kind kind() const noexcept {
    return std::holds_alternative<std::vector<GrayLevel>>(samples_) ? Kind::gray
                                                                   : Kind::color;
  }
  bool same_shape(const ImagePlane& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  // Throw KindMismatch when the plane holds the other kind.
  std::span<const GrayLevel> gray() const;
  std::span<const ColorVec> color() const;

  GrayLevel gray_at(std::size_t x, std::size_t y) const { return gray()[y * width_ + x]; }
  ColorVec color_at(std::size_t x, std::size_t y) const { return color()[y * width_ + x]; }

  friend bool operator==(const ImagePlane&, const ImagePlane&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::variant<std::vector<GrayLevel>, std::vector<ColorVec>> samples_;
};

// Throws DimensionMismatch / KindMismatch unless a and b agree.
void require_compatible(const ImagePlane& a, const ImagePlane& b);

// Pointwise application of a gray or color function, partitioned by rows.
template <class GrayFn, class ColorFn>
ImagePlane map_samples(const ImagePlane& f, GrayFn&& gray_fn, ColorFn&& color_fn) {
  const std::size_t w = f.width();
  if (f.kind() == Kind::gray) {
    const auto in = f.gray();
    std::vector<GrayLevel> out(in.size());
    parallel::for_rows(f.height(), [&](std::size_t, std::size_t y0, std::size_t y1) {
      for (std::size_t i = y0 * w; i < y1 * w; ++i) out[i] = gray_fn(in[i]);
    });
    return ImagePlane(w, f.height(), std::move(out));
  }
  const auto in = f.color();
  std::vector<ColorVec> out(in.size());
  parallel::for_rows(f.height(), [&](std::size_t, std::size_t y0, std::size_t y1) {
    for (std::size_t i = y0 * w; i < y1 * w; ++i) out[i] = color_fn(in[i]);
  });
  return ImagePlane(w, f.height(), std::move(out));
}

// Pointwise combination of two planes of identical shape and kind.
template <class GrayFn, class ColorFn>
ImagePlane zip_samples(const ImagePlane& f1, const ImagePlane& f2, GrayFn&& gray_fn,
                       ColorFn&& color_fn) {
  require_compatible(f1, f2);
  const std::size_t w = f1.width();
  if (f1.kind() == Kind::gray) {
    const auto a = f1.gray();
    const auto b = f2.gray();
    std::vector<GrayLevel> out(a.size());
    parallel::for_rows(f1.height(), [&](std::size_t, std::size_t y0, std::size_t y1) {
      for (std::size_t i = y0 * w; i < y1 * w; ++i) out[i] = gray_fn(a[i], b[i]);
    });
    return ImagePlane(w, f1.height(), std::move(out));
  }
  const auto a = f1.color();
  const auto b = f2.color();
  std::vector<ColorVec> out(a.size());
  parallel::for_rows(f1.height(), [&](std::size_t, std::size_t y0, std::size_t y1) {
    for (std::size_t i = y0 * w; i < y1 * w; ++i) out[i] = color_fn(a[i], b[i]);
  });
  return ImagePlane(w, f1.height(), std::move(out));
}

ImagePlane constant_image(std::size_t width, std::size_t height, GrayLevel value);
ImagePlane constant_image(std::size_t width, std::size_t height, const ColorVec& value);

// Pointwise lifts of the algebra.
ImagePlane img_add(const ImagePlane& f1, const ImagePlane& f2);
ImagePlane img_sub(const ImagePlane& f1, const ImagePlane& f2);
ImagePlane img_neg(const ImagePlane& f);
ImagePlane img_scale(double lambda, const ImagePlane& f);

// Decomposition around the neutral level: pos_part keeps max(f, 0) and
// neg_part keeps min(f, 0), channelwise for color, so that
// img_add(pos_part(f), neg_part(f)) == f exactly.
ImagePlane pos_part(const ImagePlane& f);
ImagePlane neg_part(const ImagePlane& f);

// Discrete L2 scalar product with unit pixel area, accumulated with
// compensated summation.
double l2_dot(const ImagePlane& f1, const ImagePlane& f2);
double l2_norm(const ImagePlane& f);

}  // namespace blip
