#include "spatialkit/render.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "spatialkit/errors.hpp"
#include "spatialkit/font.hpp"
#include "spatialkit/png.hpp"

namespace spatialkit {

namespace {

const std::vector<Rgb>& base_palette() {
  static const std::vector<Rgb> kPalette = {
      {255, 255, 255},  // white
      {0, 0, 0},        // black
      {200, 200, 200},  // grid gray
      {110, 110, 110},  // obstacle gray
      // marker colors
      {230, 25, 75},   {60, 180, 75},   {0, 130, 200},  {245, 130, 48},
      {145, 30, 180},  {70, 200, 200},  {240, 50, 230}, {128, 128, 0},
      {0, 0, 128},     {170, 110, 40},  {128, 0, 0},    {0, 128, 128},
  };
  return kPalette;
}

std::string hex(const Rgb& c) {
  return fmt::format("#{:02x}{:02x}{:02x}", c.r, c.g, c.b);
}

std::string escape_xml(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

// Draws every primitive twice: as an SVG element and into the bitmap, using
// the same geometry so both outputs agree.
class DualCanvas {
 public:
  DualCanvas(int width, int height) {
    raster_.width = width;
    raster_.height = height;
    raster_.palette = base_palette();
    raster_.pixels.assign(static_cast<std::size_t>(width) * height, kWhite);
    svg_ = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\">\n"
        "<rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{1}\" fill=\"#ffffff\"/>\n",
        width, height);
  }

  void fill_circle(double cx, double cy, double r, std::uint8_t color,
                   std::string_view cls) {
    svg_ += fmt::format(
        "<circle class=\"{}\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"{:.2f}\" "
        "fill=\"{}\"/>\n",
        cls, cx, cy, r, hex(raster_.palette[color]));
    paint_if(cx - r, cy - r, cx + r, cy + r, color, [&](double x, double y) {
      return (x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r;
    });
  }

  void ring(double cx, double cy, double r, double stroke, std::uint8_t color,
            std::string_view cls) {
    svg_ += fmt::format(
        "<circle class=\"{}\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"{:.2f}\" "
        "fill=\"none\" stroke=\"{}\" stroke-width=\"{:.2f}\"/>\n",
        cls, cx, cy, r, hex(raster_.palette[color]), stroke);
    const double outer = r + stroke / 2;
    const double inner = r - stroke / 2;
    paint_if(cx - outer, cy - outer, cx + outer, cy + outer, color,
             [&](double x, double y) {
               const double d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
               return d2 <= outer * outer && d2 >= inner * inner;
             });
  }

  void fill_rect(double x, double y, double w, double h, std::uint8_t color,
                 std::string_view cls) {
    svg_ += fmt::format(
        "<rect class=\"{}\" x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" "
        "height=\"{:.2f}\" fill=\"{}\"/>\n",
        cls, x, y, w, h, hex(raster_.palette[color]));
    paint_if(x, y, x + w, y + h, color, [&](double px, double py) {
      return px >= x && px < x + w && py >= y && py < y + h;
    });
  }

  // Text with its top-left corner at (x, y), snapped to whole pixels.
  void text(int x, int y, std::string_view content, int scale,
            std::uint8_t color, std::string_view cls) {
    const int glyph_h = kGlyphHeight * scale;
    svg_ += fmt::format(
        "<text class=\"{}\" x=\"{}\" y=\"{}\" font-family=\"sans-serif\" "
        "font-size=\"{}\" fill=\"{}\">{}</text>\n",
        cls, x, y + glyph_h, glyph_h + 2 * scale, hex(raster_.palette[color]),
        escape_xml(content));
    int cursor = x;
    for (char c : content) {
      const auto rows = glyph(c);
      for (int gy = 0; gy < kGlyphHeight; ++gy) {
        for (int gx = 0; gx < kGlyphWidth; ++gx) {
          if (!(rows[static_cast<std::size_t>(gy)] >> (kGlyphWidth - 1 - gx) & 1)) {
            continue;
          }
          for (int sy = 0; sy < scale; ++sy) {
            for (int sx = 0; sx < scale; ++sx) {
              put(cursor + gx * scale + sx, y + gy * scale + sy, color);
            }
          }
        }
      }
      cursor += (kGlyphWidth + 1) * scale;
    }
  }

  static int text_width(std::string_view content, int scale) {
    if (content.empty()) return 0;
    return static_cast<int>(content.size()) * (kGlyphWidth + 1) * scale - scale;
  }

  ImageDocument finish() && {
    svg_ += "</svg>\n";
    ImageDocument doc;
    doc.png = encode_png(raster_);
    doc.svg = std::move(svg_);
    doc.raster = std::move(raster_);
    return doc;
  }

 private:
  void put(int x, int y, std::uint8_t color) {
    if (x < 0 || y < 0 || x >= raster_.width || y >= raster_.height) return;
    raster_.pixels[static_cast<std::size_t>(y) * raster_.width + x] = color;
  }

  // Samples pixel centers inside the bounding box.
  template <typename Inside>
  void paint_if(double x0, double y0, double x1, double y1, std::uint8_t color,
                Inside inside) {
    const int ix0 = std::max(0, static_cast<int>(std::floor(x0)));
    const int iy0 = std::max(0, static_cast<int>(std::floor(y0)));
    const int ix1 = std::min(raster_.width - 1, static_cast<int>(std::ceil(x1)));
    const int iy1 = std::min(raster_.height - 1, static_cast<int>(std::ceil(y1)));
    for (int y = iy0; y <= iy1; ++y) {
      for (int x = ix0; x <= ix1; ++x) {
        if (inside(x + 0.5, y + 0.5)) put(x, y, color);
      }
    }
  }

  Raster raster_;
  std::string svg_;
};

// Label placed up and to the right of the marker, flipped inward near the
// image edges.
std::pair<int, int> label_anchor(const DiagramSpec& spec, double px, double py,
                                 std::string_view text) {
  const int w = DualCanvas::text_width(text, spec.font_scale);
  const int h = kGlyphHeight * spec.font_scale;
  const int gap = spec.marker_radius + 3;
  int x = static_cast<int>(std::lround(px)) + gap;
  int y = static_cast<int>(std::lround(py)) - gap - h;
  if (x + w > spec.width - 2) x = static_cast<int>(std::lround(px)) - gap - w;
  if (y < 2) y = static_cast<int>(std::lround(py)) + gap;
  return {x, y};
}

void draw_labeled_markers(DualCanvas& canvas, const DiagramSpec& spec,
                          const std::vector<SceneObject>& objects,
                          const std::string* highlight) {
  const CanvasTransform transform(spec);
  // Labels go down first so markers are never painted over.
  for (const auto& obj : objects) {
    const auto [px, py] = transform.to_pixel(obj.point);
    const auto [lx, ly] = label_anchor(spec, px, py, obj.label);
    canvas.text(lx, ly, obj.label, spec.font_scale, kBlack, "label");
  }
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto [px, py] = transform.to_pixel(objects[i].point);
    if (highlight && objects[i].label == *highlight) {
      canvas.ring(px, py, spec.marker_radius + 5.0, 3.0, kBlack, "start-ring");
    }
    canvas.fill_circle(px, py, spec.marker_radius, marker_color(spec, i),
                       "marker");
  }
}

}  // namespace

void validate(const DiagramSpec& spec) {
  if (spec.width < 128 || spec.height < 128) {
    throw Error(ErrorCode::InvalidArgument, "diagram must be at least 128x128");
  }
  if (spec.marker_radius < 1 || spec.font_scale < 1 || spec.padding < 0 ||
      2 * spec.padding >= std::min(spec.width, spec.height)) {
    throw Error(ErrorCode::InvalidArgument, "diagram style values out of range");
  }
}

std::uint8_t marker_color(const DiagramSpec& spec, std::size_t object_index) {
  const auto slot = (object_index + static_cast<std::size_t>(spec.palette_offset)) %
                    kMarkerColors;
  return static_cast<std::uint8_t>(kFirstMarkerColor + slot);
}

CanvasTransform::CanvasTransform(const DiagramSpec& spec)
    : origin_x_(spec.padding),
      origin_y_(spec.padding),
      scale_x_(static_cast<double>(spec.width - 2 * spec.padding) / kCanvasSize),
      scale_y_(static_cast<double>(spec.height - 2 * spec.padding) / kCanvasSize) {}

std::pair<double, double> CanvasTransform::to_pixel(Point p) const {
  return {origin_x_ + p.x * scale_x_,
          origin_y_ + (kCanvasSize - p.y) * scale_y_};
}

std::pair<double, double> CanvasTransform::to_canvas(double px, double py) const {
  return {(px - origin_x_) / scale_x_,
          kCanvasSize - (py - origin_y_) / scale_y_};
}

ImageDocument render_scene(const Scene& scene, const DiagramSpec& spec) {
  validate(spec);
  DualCanvas canvas(spec.width, spec.height);
  draw_labeled_markers(canvas, spec, scene.objects, nullptr);
  return std::move(canvas).finish();
}

ImageDocument render_tsp(const TspInstance& instance, const DiagramSpec& spec) {
  validate(spec);
  DualCanvas canvas(spec.width, spec.height);
  draw_labeled_markers(canvas, spec, instance.objects, &instance.start_label);
  const std::string legend = "START: " + instance.start_label;
  canvas.text(8, 8, legend, spec.font_scale, kBlack, "legend");
  return std::move(canvas).finish();
}

ImageDocument render_spp(const SppInstance& instance, const DiagramSpec& spec) {
  validate(spec);
  DualCanvas canvas(spec.width, spec.height);
  const int n = instance.grid_n;
  const double left = spec.padding;
  const double top = spec.padding;
  const double cell_w = static_cast<double>(spec.width - 2 * spec.padding) / n;
  const double cell_h = static_cast<double>(spec.height - 2 * spec.padding) / n;
  // Row 0 is drawn at the bottom.
  auto cell_origin = [&](Cell c) {
    return std::pair{left + c.col * cell_w, top + (n - 1 - c.row) * cell_h};
  };

  for (Cell c : instance.obstacles) {
    const auto [x, y] = cell_origin(c);
    canvas.fill_rect(x, y, cell_w, cell_h, kObstacleGray, "obstacle");
  }
  for (int k = 0; k <= n; ++k) {
    canvas.fill_rect(left + k * cell_w - 1, top - 1, 2, n * cell_h + 2, kBlack,
                     "gridline");
    canvas.fill_rect(left - 1, top + k * cell_h - 1, n * cell_w + 2, 2, kBlack,
                     "gridline");
  }

  const int scale = spec.font_scale;
  const int glyph_h = kGlyphHeight * scale;
  for (int k = 0; k < n; ++k) {
    const std::string num = std::to_string(k);
    const int w = DualCanvas::text_width(num, scale);
    canvas.text(static_cast<int>(std::lround(left + (k + 0.5) * cell_w)) - w / 2,
                static_cast<int>(std::lround(top + n * cell_h)) + 6, num, scale,
                kBlack, "axis");
    canvas.text(static_cast<int>(std::lround(left)) - 8 - w,
                static_cast<int>(std::lround(top + (n - 1 - k + 0.5) * cell_h)) -
                    glyph_h / 2,
                num, scale, kBlack, "axis");
  }

  const double marker = std::min(cell_w, cell_h) * 0.3;
  auto glyph_in_cell = [&](Cell c, std::string_view letter) {
    const auto [x, y] = cell_origin(c);
    const int w = DualCanvas::text_width(letter, scale);
    canvas.text(static_cast<int>(std::lround(x + cell_w / 2)) - w / 2,
                static_cast<int>(std::lround(y + cell_h / 2)) - glyph_h / 2,
                letter, scale, kWhite, "endpoint-label");
  };
  {
    const auto [x, y] = cell_origin(instance.start);
    canvas.fill_circle(x + cell_w / 2, y + cell_h / 2, marker,
                       kFirstMarkerColor + 1, "start");
    glyph_in_cell(instance.start, "S");
  }
  {
    const auto [x, y] = cell_origin(instance.end);
    canvas.fill_rect(x + cell_w / 2 - marker, y + cell_h / 2 - marker,
                     2 * marker, 2 * marker, kFirstMarkerColor, "end");
    glyph_in_cell(instance.end, "E");
  }
  canvas.text(8, 8, "S = START   E = END", scale, kBlack, "legend");
  return std::move(canvas).finish();
}

}  // namespace spatialkit
