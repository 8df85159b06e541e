#include <cmath>
#include <set>

#include "doctest.h"
#include "spatialkit/errors.hpp"
#include "spatialkit/scene_gen.hpp"

using namespace spatialkit;

TEST_CASE("same seed and index give the same scene") {
  const Scene a = sample_scene(7, 0);
  const Scene b = sample_scene(7, 0);
  CHECK(a == b);
  CHECK(a.scene_id == "scene-7-000000");
  CHECK(a.objects.size() == 5);
  CHECK(sample_scene(7, 1) != a);
  CHECK(sample_scene(8, 0) != a);
}

TEST_CASE("streams with different prefixes do not share scenes") {
  GenConfig other;
  other.id_prefix = "basic";
  const Scene a = sample_scene(7, 0);
  const Scene b = sample_scene(7, 0, other);
  CHECK(b.scene_id == "basic-7-000000");
  CHECK(a.objects != b.objects);
}

TEST_CASE("infeasible separation exhausts the attempt budget") {
  GenConfig cfg;
  cfg.min_separation = 2000;
  cfg.max_attempts = 50;
  try {
    sample_scene(1, 0, cfg);
    FAIL("expected GenerationExhausted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GenerationExhausted);
  }
}

TEST_CASE("invalid configurations are rejected") {
  GenConfig cfg;
  cfg.min_objects = 6;
  cfg.max_objects = 4;
  CHECK_THROWS_AS(validate(cfg), Error);
  cfg = {};
  cfg.min_objects = 1;
  cfg.max_objects = 1;
  CHECK_THROWS_AS(validate(cfg), Error);
  cfg = {};
  cfg.max_attempts = 0;
  CHECK_THROWS_AS(validate(cfg), Error);
}

TEST_CASE("object count range is honoured") {
  GenConfig cfg;
  cfg.min_objects = 4;
  cfg.max_objects = 6;
  std::set<std::size_t> seen;
  for (const auto& s : sample_batch(3, 300, cfg)) {
    seen.insert(s.objects.size());
    CHECK(s.objects.front().label == "A");
  }
  CHECK(seen == std::set<std::size_t>{4, 5, 6});
}

TEST_CASE("batch ids are distinct and independent of worker count") {
  const auto one = sample_batch(42, 100, {}, 1);
  const auto many = sample_batch(42, 100, {}, 7);
  CHECK(one == many);
  std::set<std::string> ids;
  for (const auto& s : one) ids.insert(s.scene_id);
  CHECK(ids.size() == 100);
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i] == sample_scene(42, i));
}

TEST_CASE("post-check over 10000 scenes: every rejection rule holds") {
  const auto scenes = sample_batch(2024, 10000, {}, 4);
  std::size_t violations = 0;
  for (const auto& s : scenes) {
    for (const auto& o : s.objects) {
      for (int line : {400, 600}) {
        violations += std::abs(o.point.x - line) < 5 || std::abs(o.point.y - line) < 5;
      }
    }
    std::vector<double> dists;
    for (std::size_t i = 0; i < s.objects.size(); ++i) {
      for (std::size_t j = i + 1; j < s.objects.size(); ++j) {
        const double dx = s.objects[j].point.x - s.objects[i].point.x;
        const double dy = s.objects[j].point.y - s.objects[i].point.y;
        const double d = std::sqrt(dx * dx + dy * dy);
        violations += d < 80.0;
        violations += dx == 0 || dy == 0;
        const double dev =
            std::atan2(std::min(std::abs(dx), std::abs(dy)), std::max(std::abs(dx), std::abs(dy))) *
            180.0 / M_PI;
        violations += std::abs(dev - 11.25) < 1.0;
        dists.push_back(d);
      }
    }
    std::sort(dists.begin(), dists.end());
    for (std::size_t k = 1; k < dists.size(); ++k) violations += dists[k] - dists[k - 1] < 1.0;
    if (find_violation(s, {})) ++violations;
  }
  CHECK(violations == 0);
}
