// Writes deterministic synthetic PGM/PPM test scenes.
#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "blip/error.hpp"
#include "blip/raster.hpp"
#include "blip/synthetic.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Synthetic scenes for blip"};
  std::string scene = "gray";
  std::size_t width = 256;
  std::size_t height = 256;
  std::uint64_t seed = 1;
  std::vector<double> cast;
  int top = 230;
  int bottom = 128;
  std::string output;

  app.add_option("scene", scene, "gray | color | step")
      ->check(CLI::IsMember({"gray", "color", "step"}));
  app.add_option("-W,--width", width)->check(CLI::PositiveNumber);
  app.add_option("-H,--height", height)->check(CLI::PositiveNumber);
  app.add_option("--seed", seed);
  app.add_option("--cast", cast, "Color cast r g b in (-1, 1)")->expected(3)->delimiter(',');
  app.add_option("--top", top, "Step: top code")->check(CLI::Range(0, 255));
  app.add_option("--bottom", bottom, "Step: bottom code")->check(CLI::Range(0, 255));
  app.add_option("-o,--output", output)->required();
  CLI11_PARSE(app, argc, argv);

  try {
    blip::RasterBuffer r;
    if (scene == "gray") {
      r = blip::synthetic::gray_scene(width, height, seed);
    } else if (scene == "color") {
      blip::ColorVec c{};
      if (cast.size() == 3) {
        c = {blip::GrayLevel(cast[0]), blip::GrayLevel(cast[1]), blip::GrayLevel(cast[2])};
      }
      r = blip::synthetic::color_scene(width, height, seed, c);
    } else {
      r = blip::synthetic::gray_step(width, height, static_cast<std::uint8_t>(top),
                                     static_cast<std::uint8_t>(bottom));
    }
    blip::write_pnm(output, r);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
