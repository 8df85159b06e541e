#pragma once

#include <array>
#include <cstdint>

namespace spatialkit {

inline constexpr int kGlyphWidth = 5;
inline constexpr int kGlyphHeight = 7;

// 5x7 bitmap rows, most significant of the low five bits is the leftmost
// column. Lowercase maps to uppercase; unknown characters are blank.
std::array<std::uint8_t, kGlyphHeight> glyph(char c);

}  // namespace spatialkit
