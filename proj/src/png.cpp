#include "spatialkit/png.hpp"

#include <array>
#include <string_view>

#include <zlib.h>

#include "spatialkit/errors.hpp"

namespace spatialkit {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_chunk(std::vector<std::uint8_t>& out, std::string_view type,
               const std::vector<std::uint8_t>& data) {
  put_u32(out, static_cast<std::uint32_t>(data.size()));
  const std::size_t crc_from = out.size();
  out.insert(out.end(), type.begin(), type.end());
  out.insert(out.end(), data.begin(), data.end());
  const auto crc = crc32(0L, out.data() + crc_from,
                         static_cast<uInt>(out.size() - crc_from));
  put_u32(out, static_cast<std::uint32_t>(crc));
}

}  // namespace

std::vector<std::uint8_t> encode_png(const Raster& raster) {
  if (raster.palette.empty() || raster.palette.size() > 256) {
    throw Error(ErrorCode::InvalidArgument, "PNG palette must hold 1..256 colors");
  }
  std::vector<std::uint8_t> out = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

  std::vector<std::uint8_t> header;
  put_u32(header, static_cast<std::uint32_t>(raster.width));
  put_u32(header, static_cast<std::uint32_t>(raster.height));
  header.insert(header.end(), {8, 3, 0, 0, 0});  // depth 8, palette color
  put_chunk(out, "IHDR", header);

  std::vector<std::uint8_t> palette;
  for (const Rgb& c : raster.palette) palette.insert(palette.end(), {c.r, c.g, c.b});
  put_chunk(out, "PLTE", palette);

  const auto w = static_cast<std::size_t>(raster.width);
  std::vector<std::uint8_t> scanlines;
  scanlines.reserve((w + 1) * static_cast<std::size_t>(raster.height));
  for (int y = 0; y < raster.height; ++y) {
    scanlines.push_back(0);  // filter: none
    const auto row = raster.pixels.begin() + static_cast<std::ptrdiff_t>(y * w);
    scanlines.insert(scanlines.end(), row, row + static_cast<std::ptrdiff_t>(w));
  }
  uLongf packed_size = compressBound(static_cast<uLong>(scanlines.size()));
  std::vector<std::uint8_t> packed(packed_size);
  if (compress2(packed.data(), &packed_size, scanlines.data(),
                static_cast<uLong>(scanlines.size()), 6) != Z_OK) {
    throw Error(ErrorCode::IoFailure, "zlib compression failed");
  }
  packed.resize(packed_size);
  put_chunk(out, "IDAT", packed);
  put_chunk(out, "IEND", {});
  return out;
}

}  // namespace spatialkit
