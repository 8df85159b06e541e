#pragma once

#include <cstdint>
#include <vector>

#include "spatialkit/render.hpp"

namespace spatialkit {

// 8-bit palette PNG with a fixed zlib level, so output bytes depend only on
// the raster.
std::vector<std::uint8_t> encode_png(const Raster& raster);

}  // namespace spatialkit
