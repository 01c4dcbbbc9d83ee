#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "blip/image.hpp"

namespace blip {

// 8-bit raster as it lives on disk: row-major, channels interleaved.
struct RasterBuffer {
  static constexpr int kMaxval = 255;
  static constexpr int kLevels = kMaxval + 1;

  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t channels = 1;  // 1 (gray) or 3 (RGB)
  std::vector<std::uint8_t> pixels;

  friend bool operator==(const RasterBuffer&, const RasterBuffer&) = default;
};

// Binary PGM (P5) / PPM (P6) with maxval 255.
// Throws MalformedHeader, UnsupportedFormat or TruncatedData.
RasterBuffer decode_pnm(std::span<const std::uint8_t> bytes);

// Canonical "P5\n<w> <h>\n255\n" (or P6) header followed by the samples.
std::vector<std::uint8_t> encode_pnm(const RasterBuffer& raster);

// File helpers; throw FormatError subclasses or std::system_error on I/O.
RasterBuffer read_pnm(const std::filesystem::path& path);
void write_pnm(const std::filesystem::path& path, const RasterBuffer& raster);

// Mid-riser quantizer between 8-bit codes and the open interval:
// p -> (2p + 1 - 256) / 256, and back with round-half-away-from-zero.
GrayLevel code_to_level(std::uint8_t p) noexcept;
std::uint8_t level_to_code(GrayLevel v) noexcept;

ImagePlane to_model(const RasterBuffer& raster);
RasterBuffer from_model(const ImagePlane& f);

// How contrast maps become pixels. `magnitude` sends |c| in [0, 1) to
// black..white; `signed_values` runs the quantizer directly, so 0 is mid-gray.
enum class Display { magnitude, signed_values };

// Gray map -> 8-bit raster using the chosen display convention.
RasterBuffer render_display(const ImagePlane& map, Display mode);

// Illumination estimate for subtractive correction: a Gaussian blur of the
// arctanh field, channelwise, with a kernel of radius ceil(3 sigma) and
// clamped borders, mapped back through tanh. Throws std::invalid_argument
// unless sigma is finite and positive.
ImagePlane gaussian_correction(const ImagePlane& f, double sigma);

}  // namespace blip
