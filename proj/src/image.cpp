#include "blip/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "blip/compensated_sum.hpp"
#include "blip/error.hpp"

namespace blip {

std::string_view to_string(Kind kind) noexcept {
  return kind == Kind::gray ? "gray" : "color";
}

namespace {

void check_shape(std::size_t width, std::size_t height, std::size_t count) {
  if (width == 0 || height == 0) {
    throw DimensionMismatch("image dimensions must be positive");
  }
  if (count != width * height) {
    throw DimensionMismatch("sample count " + std::to_string(count) +
                            " does not match " + std::to_string(width) + "x" +
                            std::to_string(height));
  }
}

std::string shape_string(const ImagePlane& f) {
  return std::to_string(f.width()) + "x" + std::to_string(f.height());
}

GrayLevel gmax0(GrayLevel v) noexcept { return v.value() > 0.0 ? v : GrayLevel{}; }
GrayLevel gmin0(GrayLevel v) noexcept { return v.value() < 0.0 ? v : GrayLevel{}; }

}  // namespace

ImagePlane::ImagePlane(std::size_t width, std::size_t height,
                       std::vector<GrayLevel> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  check_shape(width, height, std::get<0>(samples_).size());
}

ImagePlane::ImagePlane(std::size_t width, std::size_t height,
                       std::vector<ColorVec> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  check_shape(width, height, std::get<1>(samples_).size());
}

std::span<const GrayLevel> ImagePlane::gray() const {
  if (const auto* s = std::get_if<std::vector<GrayLevel>>(&samples_)) return *s;
  throw KindMismatch("expected a gray image, got a color image");
}

std::span<const ColorVec> ImagePlane::color() const {
  if (const auto* s = std::get_if<std::vector<ColorVec>>(&samples_)) return *s;
  throw KindMismatch("expected a color image, got a gray image");
}

void require_compatible(const ImagePlane& a, const ImagePlane& b) {
  if (!a.same_shape(b)) {
    throw DimensionMismatch("image shapes differ: " + shape_string(a) + " vs " +
                            shape_string(b));
  }
  if (a.kind() != b.kind()) {
    throw KindMismatch(std::string("cannot combine ") + std::string(to_string(a.kind())) +
                       " and " + std::string(to_string(b.kind())) + " images");
  }
}

ImagePlane constant_image(std::size_t width, std::size_t height, GrayLevel value) {
  return ImagePlane(width, height, std::vector<GrayLevel>(width * height, value));
}

ImagePlane constant_image(std::size_t width, std::size_t height, const ColorVec& value) {
  return ImagePlane(width, height, std::vector<ColorVec>(width * height, value));
}

ImagePlane img_add(const ImagePlane& f1, const ImagePlane& f2) {
  return zip_samples(f1, f2, gadd, cadd);
}

ImagePlane img_sub(const ImagePlane& f1, const ImagePlane& f2) {
  return zip_samples(f1, f2, gsub, csub);
}

ImagePlane img_neg(const ImagePlane& f) { return map_samples(f, gneg, cneg); }

ImagePlane img_scale(double lambda, const ImagePlane& f) {
  return map_samples(
      f, [lambda](GrayLevel v) { return gscale(lambda, v); },
      [lambda](const ColorVec& v) { return cscale(lambda, v); });
}

ImagePlane pos_part(const ImagePlane& f) {
  return map_samples(f, gmax0, [](const ColorVec& v) {
    return ColorVec{gmax0(v.r), gmax0(v.g), gmax0(v.b)};
  });
}

ImagePlane neg_part(const ImagePlane& f) {
  return map_samples(f, gmin0, [](const ColorVec& v) {
    return ColorVec{gmin0(v.r), gmin0(v.g), gmin0(v.b)};
  });
}

double l2_dot(const ImagePlane& f1, const ImagePlane& f2) {
  require_compatible(f1, f2);
  const std::size_t w = f1.width();
  const std::size_t chunks = parallel::chunk_count(f1.height());
  std::vector<CompensatedSum> partial(std::max<std::size_t>(chunks, 1));

  if (f1.kind() == Kind::gray) {
    const auto a = f1.gray();
    const auto b = f2.gray();
    parallel::for_rows(f1.height(), [&](std::size_t k, std::size_t y0, std::size_t y1) {
      for (std::size_t i = y0 * w; i < y1 * w; ++i) partial[k].add(gdot(a[i], b[i]));
    });
  } else {
    const auto a = f1.color();
    const auto b = f2.color();
    parallel::for_rows(f1.height(), [&](std::size_t k, std::size_t y0, std::size_t y1) {
      for (std::size_t i = y0 * w; i < y1 * w; ++i) {
        partial[k].add(gdot(a[i].r, b[i].r));
        partial[k].add(gdot(a[i].g, b[i].g));
        partial[k].add(gdot(a[i].b, b[i].b));
      }
    });
  }

  CompensatedSum total;
  for (const auto& p : partial) total.merge(p);
  return total.value();
}

double l2_norm(const ImagePlane& f) { return std::sqrt(l2_dot(f, f)); }

}  // namespace blip
