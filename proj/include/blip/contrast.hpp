#pragma once

#include <cstddef>
#include <string_view>

#include "blip/image.hpp"

namespace blip {

struct PixelCoord {
  std::size_t x = 0;  // column
  std::size_t y = 0;  // row

  friend constexpr bool operator==(PixelCoord, PixelCoord) noexcept = default;
};

enum class Connectivity { four = 4, eight = 8 };

struct NeighborhoodSpec {
  Connectivity connectivity = Connectivity::four;
};

enum class ContrastMode { horizontal, vertical, pixel };

// Parse "horizontal" / "vertical" / "pixel"; throws std::invalid_argument.
ContrastMode parse_contrast_mode(std::string_view text);

// Signed contrast (1/d) <x> (f(p1) <-> f(p2)), d the Euclidean distance
// between the pixel centres. f must be gray.
// Throws SamePixel when p1 == p2, std::out_of_range for pixels off the image.
GrayLevel rel_contrast(const ImagePlane& f, PixelCoord p1, PixelCoord p2);

// |rel_contrast(f, p1, p2)|.
GrayLevel abs_contrast(const ImagePlane& f, PixelCoord p1, PixelCoord p2);

// Logarithmic mean of the absolute contrasts between p and its in-image
// neighbours. Border pixels average over fewer neighbours.
GrayLevel pixel_contrast(const ImagePlane& f, PixelCoord p, NeighborhoodSpec v = {});

// Contour image for every pixel.
//   horizontal: f(x+1, y) <-> f(x, y); last column is 0
//   vertical:   f(x, y) <-> f(x, y+1); last row is 0
//   pixel:      pixel_contrast at every pixel
// Color input is processed per channel; each output pixel takes the channel
// value of largest magnitude. Throws DimensionTooSmall when the image has no
// pixel pairs along the requested direction.
ImagePlane contrast_map(const ImagePlane& f, ContrastMode mode, NeighborhoodSpec v = {});

}  // namespace blip
