#include <cmath>
#include <map>

#include "doctest.h"
#include "spatialkit/errors.hpp"
#include "spatialkit/geometry.hpp"
#include "spatialkit/rng.hpp"

using namespace spatialkit;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

Point random_point(Rng& rng) {
  return {static_cast<int>(rng.uniform_int(0, kCanvasSize)),
          static_cast<int>(rng.uniform_int(0, kCanvasSize))};
}

Point reflect_x(Point p) { return {kCanvasSize - p.x, p.y}; }
Point reflect_y(Point p) { return {p.x, kCanvasSize - p.y}; }

Direction mirror_x(Direction d) {
  switch (d) {
    case Direction::Left: return Direction::Right;
    case Direction::Right: return Direction::Left;
    case Direction::TopLeft: return Direction::TopRight;
    case Direction::TopRight: return Direction::TopLeft;
    case Direction::BottomLeft: return Direction::BottomRight;
    case Direction::BottomRight: return Direction::BottomLeft;
    default: return d;
  }
}

}  // namespace

TEST_CASE("direction examples") {
  CHECK(direction_sector({200, 200}, {800, 800}, DirectionMode::Four) == Direction::TopRight);
  CHECK(direction_sector({500, 500}, {900, 500}, DirectionMode::Eight) == Direction::Right);
  CHECK(direction_sector({500, 500}, {900, 550}, DirectionMode::Eight) == Direction::Right);
  CHECK(direction_sector({500, 500}, {500, 900}, DirectionMode::Eight) == Direction::Top);
  CHECK(direction_sector({500, 500}, {100, 100}, DirectionMode::Eight) == Direction::BottomLeft);
}

TEST_CASE("deviation of (400, 50) matches atan2 reference") {
  // atan2(50, 400) in degrees, computed independently.
  CHECK(axis_deviation_degrees({500, 500}, {900, 550}) == doctest::Approx(7.125016348901798));
  CHECK(boundary_gap_degrees({500, 500}, {900, 550}) ==
        doctest::Approx(11.25 - 7.125016348901798));
}

TEST_CASE("direction errors") {
  CHECK(code_of([] { direction_sector({5, 5}, {5, 5}, DirectionMode::Eight); }) ==
        ErrorCode::DegenerateInput);
  CHECK(code_of([] { direction_sector({5, 5}, {5, 90}, DirectionMode::Four); }) ==
        ErrorCode::AmbiguousAxis);
}

TEST_CASE("sector boundary belongs to the diagonal") {
  SectorConfig wide{45.0, 1.0};
  // At half-width 45 every non-diagonal vector is cardinal; the exact diagonal stays diagonal.
  CHECK(direction_sector({0, 0}, {10, 10}, DirectionMode::Eight, wide) == Direction::TopRight);
  CHECK(direction_sector({0, 0}, {10, 9}, DirectionMode::Eight, wide) == Direction::Right);
}

TEST_CASE("property: direction is antisymmetric and reflection-equivariant") {
  Rng rng(11);
  for (int i = 0; i < 20000; ++i) {
    const Point a = random_point(rng);
    const Point b = random_point(rng);
    if (a == b) continue;
    const Direction d = direction_sector(a, b, DirectionMode::Eight);
    CHECK(direction_sector(b, a, DirectionMode::Eight) == opposite(d));
    CHECK(direction_sector(reflect_x(a), reflect_x(b), DirectionMode::Eight) == mirror_x(d));
    // Flipping y is opposite() followed by undoing the x flip.
    const Direction dy = direction_sector(reflect_y(a), reflect_y(b), DirectionMode::Eight);
    CHECK(dy == mirror_x(opposite(d)));
  }
}

TEST_CASE("labels round-trip") {
  for (Direction d : kAllDirections) {
    CHECK(parse_direction(label(d)) == d);
    CHECK(parse_direction(phrase(d)) == d);
    CHECK(opposite(opposite(d)) == d);
  }
  for (Region r : kAllRegions) {
    CHECK(parse_region(label(r)) == r);
    CHECK(parse_region(phrase(r)) == r);
  }
  CHECK_FALSE(parse_direction("north").has_value());
}

TEST_CASE("euclidean distance examples") {
  CHECK(euclidean_distance({0, 0}, {300, 400}) == 500.0);
  CHECK(euclidean_distance({123, 456}, {123, 456}) == 0.0);
  CHECK(euclidean_distance({0, 0}, {1000, 1000}) == doctest::Approx(1414.2136).epsilon(1e-6));
}

TEST_CASE("property: triangle inequality and symmetry") {
  Rng rng(5);
  for (int i = 0; i < 20000; ++i) {
    const Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
    CHECK(euclidean_distance(a, b) == euclidean_distance(b, a));
    CHECK(euclidean_distance(a, c) <= euclidean_distance(a, b) + euclidean_distance(b, c) + 1e-9);
  }
}

TEST_CASE("region examples") {
  CHECK(region_of({500, 500}) == Region::Center);
  CHECK(region_of({100, 900}) == Region::TopLeft);
  CHECK(region_of({500, 50}) == Region::Bottom);
  CHECK(region_of({399, 599}) == Region::Left);
  CHECK(region_of({400, 600}) == Region::Top);
  CHECK(region_of({600, 0}) == Region::BottomRight);
  CHECK(code_of([] { region_of({1, 1}, 0.7, 0.3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("property: regions partition the canvas into 3x3 bands") {
  std::map<Region, int> counts;
  for (int x = 0; x <= kCanvasSize; ++x) {
    for (int y = 0; y <= kCanvasSize; ++y) ++counts[region_of({x, y})];
  }
  REQUIRE(counts.size() == 9);
  // Bands hold 400, 200 and 401 integer coordinates.
  CHECK(counts[Region::Center] == 200 * 200);
  CHECK(counts[Region::BottomLeft] == 400 * 400);
  CHECK(counts[Region::TopRight] == 401 * 401);
  CHECK(counts[Region::Top] == 200 * 401);
  CHECK(counts[Region::Left] == 400 * 200);
  int total = 0;
  for (const auto& [r, n] : counts) total += n;
  CHECK(total == 1001 * 1001);
}

TEST_CASE("rank pairs example") {
  // |AB| = 499.68, |AC| = 300, |BC| = 706.60 by hand.
  Scene s;
  s.objects = {{"A", {400, 400}}, {"B", {134, 823}}, {"C", {700, 400}}};
  const std::vector<LabelPair> pairs = {{"A", "B"}, {"A", "C"}, {"B", "C"}};
  const auto r = rank_pairs_by_distance(s, pairs);
  CHECK(r.argmin == 1);
  CHECK(r.argmax == 2);
  CHECK(r.distances[0] == doctest::Approx(499.684900712439));
  CHECK(r.distances[2] == doctest::Approx(706.6010189633186));
  CHECK(r.order == std::vector<std::size_t>{1, 0, 2});
}

TEST_CASE("rank pairs ties and small inputs") {
  Scene square;
  square.objects = {{"A", {100, 100}}, {"B", {500, 100}}, {"C", {500, 500}}, {"D", {100, 500}}};
  const std::vector<LabelPair> sides = {{"A", "B"}, {"C", "D"}};
  CHECK(code_of([&] { rank_pairs_by_distance(square, sides); }) == ErrorCode::TieDetected);

  Scene two;
  two.objects = {{"A", {0, 0}}, {"B", {10, 0}}, {"C", {1000, 0}}};
  const std::vector<LabelPair> p2 = {{"A", "B"}, {"A", "C"}};
  CHECK(rank_pairs_by_distance(two, p2).argmin == 0);
  const std::vector<LabelPair> p1 = {{"A", "B"}};
  CHECK(code_of([&] { rank_pairs_by_distance(two, p1); }) == ErrorCode::InvalidArgument);
}
