#include <sstream>

#include "doctest.h"
#include "spatialkit/errors.hpp"
#include "spatialkit/oracles.hpp"

using namespace spatialkit;

TEST_CASE("path enumeration examples") {
  SppInstance in;
  in.grid_n = 4;
  in.start = {0, 0};
  in.end = {3, 3};
  const auto r = oracles::enumerate_shortest_paths(in);
  CHECK(r.method == oracles::Method::PathEnumeration);
  CHECK(r.value.size() == 20);
  for (const auto& p : r.value) CHECK(p.size() == 7);

  in.end = {1, 0};
  CHECK(oracles::enumerate_shortest_paths(in).value.size() == 1);

  in.end = in.start;
  CHECK_THROWS_AS(oracles::enumerate_shortest_paths(in), Error);
}

TEST_CASE("brute-force tour examples") {
  TspInstance in;
  in.objects = {{"A", {0, 0}}, {"B", {300, 0}}, {"C", {300, 300}}, {"D", {0, 300}}};
  in.start_label = "A";
  CHECK(oracles::brute_tsp(in).value == doctest::Approx(1200.0));
  in.objects = {{"A", {0, 0}}, {"B", {250, 0}}, {"C", {900, 0}}};
  CHECK(oracles::brute_tsp(in).value == doctest::Approx(1800.0));
}

TEST_CASE("monte carlo sector frequencies") {
  // Exact share per cardinal label for uniform integer pairs, summed over
  // the triangular difference distribution: 0.0630019702.
  const auto mc = oracles::monte_carlo_sector_freq({}, 1'000'000, 3).value;
  double total = 0.0;
  for (const auto& [k, v] : mc) total += v;
  CHECK(total == doctest::Approx(1.0));
  for (const char* c : {"top", "bottom", "left", "right"}) {
    CHECK(std::abs(mc.at(c) - 0.0630019702) < 0.001);
    CHECK(std::abs(mc.at(c) - 0.0625) <= 0.003);
  }
  for (const char* d : {"top-left", "top-right", "bottom-left", "bottom-right"}) {
    CHECK(std::abs(mc.at(d) - 0.1869980298) < 0.0015);
  }

  const auto equal = oracles::monte_carlo_sector_freq({22.5, 1.0}, 400'000, 4).value;
  for (const auto& [k, v] : equal) CHECK(std::abs(v - 0.125) < 0.005);

  const auto thin = oracles::monte_carlo_sector_freq({0.01, 1.0}, 200'000, 5).value;
  CHECK(thin.at("top") + thin.at("bottom") + thin.at("left") + thin.at("right") < 0.003);
}

TEST_CASE("verification suite passes") {
  std::ostringstream out;
  CHECK(oracles::run_suite(out, {20, 200'000}));
  CHECK(out.str().find("[FAIL]") == std::string::npos);
}
