#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "spatialkit/errors.hpp"
#include "spatialkit/instruct.hpp"
#include "spatialkit/scene_gen.hpp"

using namespace spatialkit;

TEST_CASE("training bundle has the fixed capability histogram") {
  const std::map<Capability, int> expected = {
      {Capability::Direction, 3},
      {Capability::DistanceCompare, 4},
      {Capability::DistanceNumeric, 3},
      {Capability::LocalizationRegion, 3},
      {Capability::LocalizationCoordinate, 3},
      {Capability::SceneDescription, 1},
  };
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Scene s = sample_scene(5, i);
    const auto bundle = build_training_bundle(s);
    REQUIRE(bundle.size() == kTrainingItemsPerScene);
    std::map<Capability, int> got;
    std::set<std::string> ids;
    for (const auto& item : bundle) {
      ++got[item.capability];
      ids.insert(item.item_id);
      CHECK(item.answer == ground_truth_answer(s, item.query));
      CHECK(item.image_ref == "images/" + s.scene_id + ".png");
      CHECK_FALSE(item.prompt.empty());
    }
    CHECK(got == expected);
    CHECK(ids.size() == bundle.size());
    CHECK(build_training_bundle(s) == bundle);
  }
}

TEST_CASE("numeric distance answer") {
  Scene s;
  s.scene_id = "s";
  s.objects = {{"A", {0, 0}}, {"B", {300, 400}}, {"C", {900, 100}}};
  Query q;
  q.capability = Capability::DistanceNumeric;
  q.labels = {"A", "B"};
  CHECK(ground_truth_answer(s, q) == "500.0");
  q.capability = Capability::LocalizationCoordinate;
  q.labels = {"B"};
  CHECK(ground_truth_answer(s, q) == "(300, 400)");
  q.capability = Capability::LocalizationRegion;
  q.labels = {"C"};
  CHECK(ground_truth_answer(s, q) == "bottom-right");
  q.mode = DirectionMode::Four;
  CHECK(ground_truth_answer(s, q) == "bottom right");
  q = {};
  q.capability = Capability::Direction;
  q.labels = {"A", "B"};
  CHECK(ground_truth_answer(s, q) == "top-right");
  q.capability = Capability::DistanceCompare;
  q.labels = {};
  q.pairs = {{"A", "B"}, {"A", "C"}};
  q.comparison = Comparison::Shorter;
  CHECK(ground_truth_answer(s, q) == "A-B");
  q.comparison = Comparison::Longest;
  CHECK(ground_truth_answer(s, q) == "A-C");
}

TEST_CASE("formatting helpers") {
  CHECK(format_distance(707.1067) == "707.1");
  CHECK(format_cell({1, 2}) == "(1, 2)");
  const std::vector<Cell> path = {{0, 0}, {1, 0}};
  CHECK(format_path(path) == "(0, 0) -> (1, 0)");
  const std::vector<std::string> order = {"A", "C", "B"};
  CHECK(format_order(order) == "A -> C -> B -> A");
  CHECK(format_order(std::vector<std::string>{}).empty());
}

TEST_CASE("direction mcq uses the four diagonal phrases") {
  const std::set<std::string> diagonal = {"top left", "top right", "bottom left", "bottom right"};
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Scene s = sample_scene(8, i);
    const auto m = build_eval_mcq(s, Capability::Direction, i);
    CHECK(std::set<std::string>(m.options.begin(), m.options.end()) == diagonal);
    const auto slot = static_cast<std::size_t>(m.answer_key - 'A');
    CHECK(m.options[slot] == m.item.answer);
    CHECK(m.item.answer == ground_truth_answer(s, m.item.query));
    CHECK(m.item.prompt.find("Answer with the letter") != std::string::npos);
  }
}

TEST_CASE("localization and distance mcqs") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Scene s = sample_scene(9, i);
    const auto loc = build_eval_mcq(s, Capability::LocalizationRegion, i);
    CHECK(std::set<std::string>(loc.options.begin(), loc.options.end()).size() == 4);
    CHECK(std::count(loc.options.begin(), loc.options.end(), loc.item.answer) == 1);

    const auto dist = build_eval_mcq(s, Capability::DistanceCompare, i);
    std::vector<LabelPair> pairs = dist.item.query.pairs;
    REQUIRE(pairs.size() == 4);
    const auto ranking = rank_pairs_by_distance(s, pairs);
    const auto extremal = *dist.item.query.comparison == Comparison::Shortest ? ranking.argmin
                                                                                : ranking.argmax;
    CHECK(dist.options[static_cast<std::size_t>(dist.answer_key - 'A')] == pair_text(pairs[extremal]));
  }
}

TEST_CASE("mcq hints pin the key slot and target") {
  const Scene s = sample_scene(8, 3);
  for (int slot = 0; slot < 4; ++slot) {
    McqHints hints;
    hints.key_slot = slot;
    CHECK(build_eval_mcq(s, Capability::LocalizationRegion, 1, hints).answer_key == 'A' + slot);
  }
  McqHints bad;
  bad.comparison = Comparison::Shorter;
  CHECK_THROWS_AS(build_eval_mcq(s, Capability::DistanceCompare, 1, bad), Error);
  CHECK_THROWS_AS(build_eval_mcq(s, Capability::DistanceNumeric, 1), Error);
}

TEST_CASE("composite prompts") {
  SppInstance spp;
  spp.grid_n = 4;
  spp.start = {0, 0};
  spp.end = {3, 3};
  const auto p = build_spp_prompt(spp);
  CHECK(p.find("4x4") != std::string::npos);
  CHECK(p.find("(0, 0)") != std::string::npos);
  CHECK(p.find("(3, 3)") != std::string::npos);
  CHECK(p.find("(c, r) -> (c, r)") != std::string::npos);
  CHECK(build_spp_prompt(spp) == p);

  TspInstance tsp;
  tsp.objects = {{"A", {0, 0}}, {"B", {100, 0}}, {"C", {0, 100}}, {"D", {500, 500}}, {"E", {900, 9}}};
  tsp.start_label = "A";
  const auto t = build_tsp_prompt(tsp);
  CHECK(t.find("Starting from object A") != std::string::npos);
  CHECK(t.find("must begin at A") != std::string::npos);
}

TEST_CASE("capability names round-trip") {
  for (Capability c : {Capability::Direction, Capability::DistanceCompare, Capability::DistanceNumeric,
                       Capability::LocalizationRegion, Capability::LocalizationCoordinate,
                       Capability::SceneDescription}) {
    CHECK(parse_capability(to_string(c)) == c);
  }
  CHECK_FALSE(parse_capability("color").has_value());
}
