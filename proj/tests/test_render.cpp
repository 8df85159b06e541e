#include <regex>
#include <string>

#include <zlib.h>

#include "doctest.h"
#include "spatialkit/composite.hpp"
#include "spatialkit/render.hpp"
#include "spatialkit/scene_gen.hpp"

using namespace spatialkit;

namespace {

std::size_t count_class(const std::string& svg, const std::string& cls) {
  const std::string needle = "class=\"" + cls + "\"";
  std::size_t n = 0;
  for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
  return n;
}

std::uint32_t be32(const std::vector<std::uint8_t>& b, std::size_t at) {
  return (std::uint32_t{b[at]} << 24) | (std::uint32_t{b[at + 1]} << 16) |
         (std::uint32_t{b[at + 2]} << 8) | b[at + 3];
}

// Walks the chunk list, checks CRCs and returns the inflated IDAT stream.
std::vector<std::uint8_t> inflate_png(const std::vector<std::uint8_t>& png, int& w, int& h) {
  REQUIRE(png.size() > 8);
  REQUIRE(std::equal(png.begin(), png.begin() + 8,
                     std::vector<std::uint8_t>{0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A}.begin()));
  std::vector<std::uint8_t> idat;
  std::size_t at = 8;
  while (at + 12 <= png.size()) {
    const std::uint32_t len = be32(png, at);
    const std::string type(png.begin() + static_cast<long>(at) + 4, png.begin() + static_cast<long>(at) + 8);
    const std::uint32_t crc =
        static_cast<std::uint32_t>(::crc32(0, png.data() + at + 4, len + 4));
    CHECK(crc == be32(png, at + 8 + len));
    if (type == "IHDR") {
      w = static_cast<int>(be32(png, at + 8));
      h = static_cast<int>(be32(png, at + 12));
    }
    if (type == "IDAT") idat.insert(idat.end(), png.begin() + static_cast<long>(at) + 8,
                                    png.begin() + static_cast<long>(at + 8 + len));
    at += 12 + len;
  }
  std::vector<std::uint8_t> raw(static_cast<std::size_t>((w + 1) * h));
  uLongf raw_len = raw.size();
  REQUIRE(::uncompress(raw.data(), &raw_len, idat.data(), idat.size()) == Z_OK);
  CHECK(raw_len == raw.size());
  return raw;
}

// Centroid of the pixels carrying `color`.
std::pair<double, double> centroid(const Raster& r, std::uint8_t color) {
  double sx = 0, sy = 0, n = 0;
  for (int y = 0; y < r.height; ++y) {
    for (int x = 0; x < r.width; ++x) {
      if (r.at(x, y) == color) {
        sx += x + 0.5;
        sy += y + 0.5;
        ++n;
      }
    }
  }
  REQUIRE(n > 0);
  return {sx / n, sy / n};
}

}  // namespace

TEST_CASE("scene diagram has one marker and one label per object") {
  const Scene s = sample_scene(7, 0);
  const auto doc = render_scene(s);
  CHECK(count_class(doc.svg, "marker") == 5);
  CHECK(count_class(doc.svg, "label") == 5);
  CHECK(doc.raster.width == 512);
  CHECK(doc.raster.height == 512);
  const auto again = render_scene(s);
  CHECK(again.svg == doc.svg);
  CHECK(again.png == doc.png);
}

TEST_CASE("png decodes to the raster") {
  const auto doc = render_scene(sample_scene(3, 4));
  int w = 0, h = 0;
  const auto raw = inflate_png(doc.png, w, h);
  CHECK(w == doc.raster.width);
  CHECK(h == doc.raster.height);
  bool same = true;
  for (int y = 0; y < h; ++y) {
    same &= raw[static_cast<std::size_t>(y * (w + 1))] == 0;
    for (int x = 0; x < w; ++x) {
      same &= raw[static_cast<std::size_t>(y * (w + 1) + 1 + x)] == doc.raster.at(x, y);
    }
  }
  CHECK(same);
}

TEST_CASE("y axis is flipped: (0, 1000) lands top-left") {
  Scene s;
  s.scene_id = "flip";
  s.objects = {{"A", {0, 1000}}, {"B", {1000, 0}}};
  const auto doc = render_scene(s);
  const auto [ax, ay] = centroid(doc.raster, marker_color(DiagramSpec{}, 0));
  const auto [bx, by] = centroid(doc.raster, marker_color(DiagramSpec{}, 1));
  CHECK(ax < 100);
  CHECK(ay < 100);
  CHECK(bx > 412);
  CHECK(by > 412);
}

TEST_CASE("marker centroids map back to object coordinates") {
  const DiagramSpec spec;
  const CanvasTransform t(spec);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Scene s = sample_scene(11, i);
    const auto doc = render_scene(s, spec);
    for (std::size_t k = 0; k < s.objects.size(); ++k) {
      const auto [px, py] = centroid(doc.raster, marker_color(spec, k));
      const auto [cx, cy] = t.to_canvas(px, py);
      // One pixel is ~2.3 canvas units; centroids are sub-pixel accurate.
      CHECK(std::abs(cx - s.objects[k].point.x) <= 1.0);
      CHECK(std::abs(cy - s.objects[k].point.y) <= 1.0);
    }
  }
}

TEST_CASE("transform round trip") {
  const CanvasTransform t{DiagramSpec{}};
  for (Point p : {Point{0, 0}, Point{1000, 1000}, Point{123, 877}}) {
    const auto [px, py] = t.to_pixel(p);
    const auto [x, y] = t.to_canvas(px, py);
    CHECK(x == doctest::Approx(p.x));
    CHECK(y == doctest::Approx(p.y));
  }
}

TEST_CASE("spp diagram") {
  SppInstance in;
  in.instance_id = "g";
  in.grid_n = 4;
  in.start = {0, 0};
  in.end = {3, 3};
  auto doc = render_spp(in);
  CHECK(count_class(doc.svg, "start") == 1);
  CHECK(count_class(doc.svg, "end") == 1);
  // 5 vertical + 5 horizontal lines bound 16 cells.
  CHECK(count_class(doc.svg, "gridline") == 10);
  CHECK(count_class(doc.svg, "obstacle") == 0);
  const auto [sx, sy] = centroid(doc.raster, kFirstMarkerColor + 1);
  const auto [ex, ey] = centroid(doc.raster, kFirstMarkerColor);
  CHECK(sx < ex);
  CHECK(sy > ey);  // start is the bottom row

  in.grid_n = 5;
  in.obstacles = {{2, 2}};
  doc = render_spp(in);
  CHECK(count_class(doc.svg, "gridline") == 12);
  CHECK(count_class(doc.svg, "obstacle") == 1);
}

TEST_CASE("tsp diagram highlights the start") {
  for (int n : {4, 5}) {
    const auto in = gen_tsp(2, 0, n);
    const auto doc = render_tsp(in);
    CHECK(count_class(doc.svg, "marker") == static_cast<std::size_t>(n));
    CHECK(count_class(doc.svg, "start-ring") == 1);
    CHECK(doc.svg.find("START: " + in.start_label) != std::string::npos);
  }
}

TEST_CASE("invalid diagram spec") {
  DiagramSpec spec;
  spec.width = 16;
  CHECK_THROWS(render_scene(sample_scene(1, 0), spec));
}
