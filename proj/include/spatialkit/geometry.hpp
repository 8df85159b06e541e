#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spatialkit {

// Canvas is the integer square [0, kCanvasSize]^2 in a y-up frame: larger y
// means "top". Renderers flip y when producing images.
inline constexpr int kCanvasSize = 1000;

struct Point {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

constexpr bool in_canvas(Point p) {
  return p.x >= 0 && p.x <= kCanvasSize && p.y >= 0 && p.y <= kCanvasSize;
}

enum class Direction : std::uint8_t {
  Top,
  Bottom,
  Left,
  Right,
  TopLeft,
  TopRight,
  BottomLeft,
  BottomRight,
};

inline constexpr Direction kAllDirections[] = {
    Direction::Top,     Direction::Bottom,   Direction::Left,
    Direction::Right,   Direction::TopLeft,  Direction::TopRight,
    Direction::BottomLeft, Direction::BottomRight};

inline constexpr Direction kDiagonalDirections[] = {
    Direction::TopLeft, Direction::TopRight, Direction::BottomLeft,
    Direction::BottomRight};

enum class DirectionMode { Four = 4, Eight = 8 };

enum class Region : std::uint8_t {
  Center,
  Top,
  Bottom,
  Left,
  Right,
  TopLeft,
  TopRight,
  BottomLeft,
  BottomRight,
};

inline constexpr Region kAllRegions[] = {
    Region::Center,  Region::Top,      Region::Bottom,
    Region::Left,    Region::Right,    Region::TopLeft,
    Region::TopRight, Region::BottomLeft, Region::BottomRight};

struct SectorConfig {
  // Cardinal sectors span +/- this many degrees about each axis.
  double cardinal_half_width = 11.25;
  // Scene generation rejects relative vectors this close to a boundary.
  double epsilon_exclusion = 1.0;
};

// Hyphenated label ("top-left"); used in training answers and manifests.
std::string_view label(Direction d);
// Spaced phrase ("top left"); used for multiple-choice option text.
std::string_view phrase(Direction d);
std::string_view label(Region r);
std::string_view phrase(Region r);

bool is_diagonal(Direction d);
Direction opposite(Direction d);

// Accepts either the hyphenated label or the spaced phrase, any case.
std::optional<Direction> parse_direction(std::string_view text);
std::optional<Region> parse_region(std::string_view text);

/// Sector of the vector a -> b.
///
/// Eight-way mode: a vector within `cardinal_half_width` degrees of an axis is
/// cardinal (strictly inside; the boundary itself belongs to the diagonal).
/// Four-way mode: quadrant split exactly at the axes.
///
/// Throws Error(DegenerateInput) when a == b and Error(AmbiguousAxis) in
/// four-way mode when the vector lies on an axis.
Direction direction_sector(Point a, Point b, DirectionMode mode,
                           const SectorConfig& cfg = {});

// Angle in degrees between a -> b and the nearest axis, in [0, 45].
double axis_deviation_degrees(Point a, Point b);

// Smallest angular gap (degrees) between a -> b and any sector boundary of
// the eight-way partition.
double boundary_gap_degrees(Point a, Point b, const SectorConfig& cfg = {});

double euclidean_distance(Point a, Point b);

/// Nine-way region with half-open bands: left/bottom below `lower`,
/// center band in [lower, upper), right/top from `upper` on.
Region region_of(Point p, double lower = 0.4, double upper = 0.6);

struct SceneObject {
  std::string label;
  Point point;

  friend bool operator==(const SceneObject&, const SceneObject&) = default;
};

// Sampled object set with unique labels.
struct Scene {
  std::string scene_id;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  std::vector<SceneObject> objects;

  const SceneObject* find(std::string_view label) const;
  // Throws Error(InvalidArgument) on unknown labels.
  Point at(std::string_view label) const;

  friend bool operator==(const Scene&, const Scene&) = default;
};

struct LabelPair {
  std::string first;
  std::string second;

  friend bool operator==(const LabelPair&, const LabelPair&) = default;
};

std::string pair_text(const LabelPair& pair);  // "A-B"

struct PairRanking {
  std::vector<double> distances;   // parallel to the input pairs
  std::vector<std::size_t> order;  // ascending by distance, stable
  std::size_t argmin = 0;
  std::size_t argmax = 0;
};

// Minimum gap between two pair distances that still counts as distinct.
inline constexpr double kTieTolerance = 1.0;

/// Orders pairs by Euclidean distance. Throws Error(TieDetected) when two
/// distances are closer than kTieTolerance.
PairRanking rank_pairs_by_distance(const Scene& scene,
                                   std::span<const LabelPair> pairs);

}  // namespace spatialkit
