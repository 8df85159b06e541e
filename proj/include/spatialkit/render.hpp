#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spatialkit/composite.hpp"
#include "spatialkit/geometry.hpp"

namespace spatialkit {

enum class DiagramKind { Scene, Spp, Tsp };

struct DiagramSpec {
  DiagramKind kind = DiagramKind::Scene;
  int width = 512;
  int height = 512;
  int marker_radius = 10;
  int font_scale = 2;  // bitmap glyphs are 5x7 pixels times this
  int padding = 40;    // pixels between the image edge and the drawing area
  int palette_offset = 0;
};

// Throws Error(InvalidArgument) if the spec cannot produce a usable image.
void validate(const DiagramSpec& spec);

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Indexed-color bitmap; row 0 is the top of the image.
struct Raster {
  int width = 0;
  int height = 0;
  std::vector<Rgb> palette;
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(x)];
  }
};

struct ImageDocument {
  std::string svg;
  Raster raster;
  std::vector<std::uint8_t> png;
};

// Fixed palette slots.
inline constexpr std::uint8_t kWhite = 0;
inline constexpr std::uint8_t kBlack = 1;
inline constexpr std::uint8_t kGridGray = 2;
inline constexpr std::uint8_t kObstacleGray = 3;
inline constexpr std::uint8_t kFirstMarkerColor = 4;
inline constexpr int kMarkerColors = 12;

// Palette slot of the i-th object marker.
std::uint8_t marker_color(const DiagramSpec& spec, std::size_t object_index);

/// Canvas units <-> pixel coordinates (continuous, pixel centers at +0.5).
/// The y axis is flipped: canvas y = 1000 maps to the top of the drawing area.
class CanvasTransform {
 public:
  explicit CanvasTransform(const DiagramSpec& spec);

  std::pair<double, double> to_pixel(Point p) const;
  std::pair<double, double> to_canvas(double px, double py) const;

 private:
  double origin_x_;
  double origin_y_;
  double scale_x_;
  double scale_y_;
};

ImageDocument render_scene(const Scene& scene, const DiagramSpec& spec = {});
ImageDocument render_spp(const SppInstance& instance,
                         const DiagramSpec& spec = {DiagramKind::Spp});
ImageDocument render_tsp(const TspInstance& instance,
                         const DiagramSpec& spec = {DiagramKind::Tsp});

}  // namespace spatialkit
