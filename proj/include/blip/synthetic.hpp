#pragma once

#include <cstddef>
#include <cstdint>

#include "blip/color.hpp"
#include "blip/raster.hpp"

// Deterministic stand-in scenes for exercising the transforms: smooth
// gradients with blobs and mild noise, hard steps, and color casts.
namespace blip::synthetic {

RasterBuffer gray_scene(std::size_t width, std::size_t height, std::uint64_t seed);

// Each channel is its own scene; `cast` is added logarithmically in the
// model domain, e.g. a reddish cast (0.45, -0.25, -0.15).
RasterBuffer color_scene(std::size_t width, std::size_t height, std::uint64_t seed,
                         const ColorVec& cast = {});

// Rows [0, height/2) hold `top`, the rest hold `bottom`.
RasterBuffer gray_step(std::size_t width, std::size_t height, std::uint8_t top,
                       std::uint8_t bottom);

}  // namespace blip::synthetic
