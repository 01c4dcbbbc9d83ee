#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>
#include <system_error>

#include "blip/error.hpp"
#include "blip/raster.hpp"

namespace blip {

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skip whitespace and '#' comments running to end of line.
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t read_number(const char* what) {
    const std::size_t before = pos_;
    skip_separators();
    if (pos_ == before) {
      throw MalformedHeader(std::string("missing separator before ") + what);
    }
    if (pos_ >= bytes_.size()) throw MalformedHeader(std::string("missing ") + what);
    if (!std::isdigit(bytes_[pos_])) throw MalformedHeader(std::string("bad ") + what);
    std::size_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw MalformedHeader(std::string(what) + " out of range");
      }
      ++pos_;
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void expect_single_space() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw MalformedHeader("missing whitespace after maxval");
    }
    ++pos_;
  }

  std::size_t position() const noexcept { return pos_; }
  void advance(std::size_t n) noexcept { pos_ += n; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

RasterBuffer decode_pnm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') throw MalformedHeader("not a netpbm file");
  const char kind = static_cast<char>(bytes[1]);
  if (kind == '1' || kind == '2' || kind == '3' || kind == '4' || kind == '7') {
    throw UnsupportedFormat(std::string("netpbm P") + kind + " is not supported");
  }
  if (kind != '5' && kind != '6') throw MalformedHeader("unknown netpbm magic");

  HeaderReader in(bytes);
  in.advance(2);
  RasterBuffer r;
  r.channels = kind == '5' ? 1 : 3;
  r.width = in.read_number("width");
  r.height = in.read_number("height");
  const std::size_t maxval = in.read_number("maxval");
  if (r.width == 0 || r.height == 0) throw MalformedHeader("zero image dimension");
  if (maxval == 0 || maxval > 65535) throw MalformedHeader("maxval out of range");
  if (maxval != RasterBuffer::kMaxval) {
    throw UnsupportedFormat("only maxval 255 is supported, got " + std::to_string(maxval));
  }
  in.expect_single_space();
  if (r.width > std::numeric_limits<std::size_t>::max() / r.height / r.channels) {
    throw MalformedHeader("image dimensions overflow");
  }

  const std::size_t count = r.width * r.height * r.channels;
  const std::size_t start = in.position();
  if (bytes.size() - start < count) {
    throw TruncatedData("expected " + std::to_string(count) + " samples, found " +
                        std::to_string(bytes.size() - start));
  }
  r.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(start),
                  bytes.begin() + static_cast<std::ptrdiff_t>(start + count));
  return r;
}

std::vector<std::uint8_t> encode_pnm(const RasterBuffer& raster) {
  const std::string header = std::string(raster.channels == 1 ? "P5" : "P6") + "\n" +
                             std::to_string(raster.width) + " " +
                             std::to_string(raster.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), raster.pixels.begin(), raster.pixels.end());
  return out;
}

RasterBuffer read_pnm(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw std::system_error(std::make_error_code(std::errc::no_such_file_or_directory),
                            "cannot open " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(file)),
                                  std::istreambuf_iterator<char>());
  return decode_pnm(bytes);
}

void write_pnm(const std::filesystem::path& path, const RasterBuffer& raster) {
  const auto bytes = encode_pnm(raster);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::system_error(std::make_error_code(std::errc::permission_denied),
                            "cannot write " + path.string());
  }
  file.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
  if (!file) {
    throw std::system_error(std::make_error_code(std::errc::io_error),
                            "write failed for " + path.string());
  }
}

}  // namespace blip
