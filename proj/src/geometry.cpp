#include "spatialkit/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "spatialkit/errors.hpp"

namespace spatialkit {

namespace {

std::string normalize_words(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (c == '-' || c == '_' || std::isspace(u)) {
      if (!out.empty() && out.back() != ' ') out.push_back(' ');
    } else {
      out.push_back(static_cast<char>(std::tolower(u)));
    }
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

}  // namespace

std::string_view label(Direction d) {
  switch (d) {
    case Direction::Top: return "top";
    case Direction::Bottom: return "bottom";
    case Direction::Left: return "left";
    case Direction::Right: return "right";
    case Direction::TopLeft: return "top-left";
    case Direction::TopRight: return "top-right";
    case Direction::BottomLeft: return "bottom-left";
    case Direction::BottomRight: return "bottom-right";
  }
  return "?";
}

std::string_view phrase(Direction d) {
  switch (d) {
    case Direction::TopLeft: return "top left";
    case Direction::TopRight: return "top right";
    case Direction::BottomLeft: return "bottom left";
    case Direction::BottomRight: return "bottom right";
    default: return label(d);
  }
}

std::string_view label(Region r) {
  switch (r) {
    case Region::Center: return "center";
    case Region::Top: return "top";
    case Region::Bottom: return "bottom";
    case Region::Left: return "left";
    case Region::Right: return "right";
    case Region::TopLeft: return "top-left";
    case Region::TopRight: return "top-right";
    case Region::BottomLeft: return "bottom-left";
    case Region::BottomRight: return "bottom-right";
  }
  return "?";
}

std::string_view phrase(Region r) {
  switch (r) {
    case Region::TopLeft: return "top left";
    case Region::TopRight: return "top right";
    case Region::BottomLeft: return "bottom left";
    case Region::BottomRight: return "bottom right";
    default: return label(r);
  }
}

bool is_diagonal(Direction d) {
  return d == Direction::TopLeft || d == Direction::TopRight ||
         d == Direction::BottomLeft || d == Direction::BottomRight;
}

Direction opposite(Direction d) {
  switch (d) {
    case Direction::Top: return Direction::Bottom;
    case Direction::Bottom: return Direction::Top;
    case Direction::Left: return Direction::Right;
    case Direction::Right: return Direction::Left;
    case Direction::TopLeft: return Direction::BottomRight;
    case Direction::TopRight: return Direction::BottomLeft;
    case Direction::BottomLeft: return Direction::TopRight;
    case Direction::BottomRight: return Direction::TopLeft;
  }
  return d;
}

std::optional<Direction> parse_direction(std::string_view text) {
  const std::string key = normalize_words(text);
  for (Direction d : kAllDirections) {
    if (key == phrase(d)) return d;
  }
  return std::nullopt;
}

std::optional<Region> parse_region(std::string_view text) {
  const std::string key = normalize_words(text);
  for (Region r : kAllRegions) {
    if (key == phrase(r)) return r;
  }
  return std::nullopt;
}

double axis_deviation_degrees(Point a, Point b) {
  const double dx = std::abs(static_cast<double>(b.x - a.x));
  const double dy = std::abs(static_cast<double>(b.y - a.y));
  // Computed on absolute values so the result is exactly symmetric under
  // reflection and axis swaps.
  return std::atan2(std::min(dx, dy), std::max(dx, dy)) * 180.0 /
         std::numbers::pi;
}

double boundary_gap_degrees(Point a, Point b, const SectorConfig& cfg) {
  return std::abs(axis_deviation_degrees(a, b) - cfg.cardinal_half_width);
}

Direction direction_sector(Point a, Point b, DirectionMode mode,
                           const SectorConfig& cfg) {
  if (a == b) {
    throw Error(ErrorCode::DegenerateInput,
                fmt::format("direction of ({}, {}) relative to itself", a.x, a.y));
  }
  const int dx = b.x - a.x;
  const int dy = b.y - a.y;

  if (mode == DirectionMode::Four) {
    if (dx == 0 || dy == 0) {
      throw Error(ErrorCode::AmbiguousAxis,
                  fmt::format("vector ({}, {}) lies on an axis", dx, dy));
    }
  } else if (axis_deviation_degrees(a, b) < cfg.cardinal_half_width) {
    if (std::abs(dx) > std::abs(dy)) {
      return dx > 0 ? Direction::Right : Direction::Left;
    }
    return dy > 0 ? Direction::Top : Direction::Bottom;
  }

  if (dy > 0) return dx > 0 ? Direction::TopRight : Direction::TopLeft;
  return dx > 0 ? Direction::BottomRight : Direction::BottomLeft;
}

double euclidean_distance(Point a, Point b) {
  return std::hypot(static_cast<double>(b.x - a.x),
                    static_cast<double>(b.y - a.y));
}

Region region_of(Point p, double lower, double upper) {
  if (!(lower > 0.0 && lower < upper && upper < 1.0)) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("region thresholds must satisfy 0 < {} < {} < 1",
                            lower, upper));
  }
  const double lo = lower * kCanvasSize;
  const double hi = upper * kCanvasSize;
  auto band = [&](int v) { return v < lo ? 0 : (v < hi ? 1 : 2); };
  const int bx = band(p.x);  // 0 left, 1 center, 2 right
  const int by = band(p.y);  // 0 bottom, 1 center, 2 top

  static constexpr Region kTable[3][3] = {
      // by = bottom, center, top
      {Region::BottomLeft, Region::Left, Region::TopLeft},
      {Region::Bottom, Region::Center, Region::Top},
      {Region::BottomRight, Region::Right, Region::TopRight},
  };
  return kTable[bx][by];
}

const SceneObject* Scene::find(std::string_view wanted) const {
  for (const auto& obj : objects) {
    if (obj.label == wanted) return &obj;
  }
  return nullptr;
}

Point Scene::at(std::string_view wanted) const {
  if (const auto* obj = find(wanted)) return obj->point;
  throw Error(ErrorCode::InvalidArgument,
              fmt::format("scene {} has no object '{}'", scene_id, wanted));
}

std::string pair_text(const LabelPair& pair) {
  return pair.first + "-" + pair.second;
}

PairRanking rank_pairs_by_distance(const Scene& scene,
                                   std::span<const LabelPair> pairs) {
  if (pairs.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "ranking needs at least two pairs");
  }
  PairRanking ranking;
  ranking.distances.reserve(pairs.size());
  for (const auto& pair : pairs) {
    ranking.distances.push_back(
        euclidean_distance(scene.at(pair.first), scene.at(pair.second)));
  }
  ranking.order.resize(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) ranking.order[i] = i;
  std::stable_sort(ranking.order.begin(), ranking.order.end(),
                   [&](std::size_t l, std::size_t r) {
                     return ranking.distances[l] < ranking.distances[r];
                   });
  for (std::size_t k = 1; k < ranking.order.size(); ++k) {
    const auto prev = ranking.order[k - 1];
    const auto cur = ranking.order[k];
    if (ranking.distances[cur] - ranking.distances[prev] < kTieTolerance) {
      throw Error(ErrorCode::TieDetected,
                  fmt::format("pairs {} and {} are {:.3f} and {:.3f} apart",
                              pair_text(pairs[prev]), pair_text(pairs[cur]),
                              ranking.distances[prev], ranking.distances[cur]));
    }
  }
  ranking.argmin = ranking.order.front();
  ranking.argmax = ranking.order.back();
  return ranking;
}

}  // namespace spatialkit
