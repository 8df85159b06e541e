#include "doctest.h"
#include "spatialkit/errors.hpp"
#include "spatialkit/evaluator.hpp"
#include "spatialkit/generate.hpp"
#include "spatialkit/oracles.hpp"

using namespace spatialkit;

namespace {

SppInstance corner4() {
  SppInstance in;
  in.instance_id = "c4";
  in.grid_n = 4;
  in.start = {0, 0};
  in.end = {3, 3};
  return in;
}

ParsedResponse path_of(std::vector<Cell> cells) {
  ParsedResponse p;
  p.kind = ResponseKind::CellPath;
  p.cells = std::move(cells);
  return p;
}

ParsedResponse order_of(std::vector<std::string> order) {
  ParsedResponse p;
  p.kind = ResponseKind::VisitOrder;
  p.order = std::move(order);
  return p;
}

McqItem mcq_with_key(char key) {
  McqItem m;
  m.item.item_id = "m";
  m.item.capability = Capability::Direction;
  m.options = {"top left", "top right", "bottom left", "bottom right"};
  m.answer_key = key;
  return m;
}

}  // namespace

TEST_CASE("mcq scoring") {
  ParsedResponse p;
  p.kind = ResponseKind::McqChoice;
  p.choice = 'B';
  CHECK(score_mcq(mcq_with_key('B'), p).verdict == Verdict::Correct);
  p.choice = 'C';
  CHECK(score_mcq(mcq_with_key('B'), p).verdict == Verdict::Incorrect);
  CHECK(score_mcq(mcq_with_key('B'), ParsedResponse::unparseable("x")).verdict ==
        Verdict::Unparseable);
  CHECK_THROWS_AS(score_mcq(mcq_with_key('B'), path_of({{0, 0}})), Error);
}

TEST_CASE("every enumerated optimal 4x4 staircase is correct") {
  const auto in = corner4();
  const auto sol = solve_spp(in);
  const auto all = oracles::enumerate_shortest_paths(in).value;
  REQUIRE(all.size() == 20);
  for (const auto& path : all) CHECK(score_spp(in, sol, path_of(path)).verdict == Verdict::Correct);
}

TEST_CASE("spp scoring rejects detours, diagonals and bad endpoints") {
  const auto in = corner4();
  const auto sol = solve_spp(in);
  // 8-step detour through (0,1) -> (1,1) -> (1,0) first ... stays simple.
  const std::vector<Cell> detour = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1},
                                    {2, 1}, {2, 2}, {2, 3}, {3, 3}};
  CHECK(score_spp(in, sol, path_of({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 2},
                                     {2, 2}, {3, 2}, {3, 3}})).verdict == Verdict::Incorrect);
  CHECK(score_spp(in, sol, path_of(detour)).verdict == Verdict::Incorrect);
  CHECK(score_spp(in, sol, path_of({{0, 0}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 3}})).verdict ==
        Verdict::Invalid);
  CHECK(score_spp(in, sol, path_of({{1, 0}, {1, 1}})).verdict == Verdict::Invalid);
  CHECK(score_spp(in, sol, ParsedResponse::unparseable("x")).verdict == Verdict::Unparseable);
}

TEST_CASE("tsp scoring modes") {
  TspInstance in;
  in.instance_id = "t";
  in.objects = {{"A", {0, 0}}, {"B", {600, 0}}, {"C", {600, 800}}, {"D", {0, 300}}};
  in.start_label = "A";
  const auto sol = solve_tsp(in);
  REQUIRE(sol.order == std::vector<std::string>{"A", "B", "C", "D"});
  for (auto mode : {TspScoring::Strict, TspScoring::LengthOptimal}) {
    CHECK(score_tsp(in, sol, order_of(sol.order), mode).verdict == Verdict::Correct);
    CHECK(score_tsp(in, sol, order_of({"A", "B", "C"}), mode).verdict == Verdict::Invalid);
    CHECK(score_tsp(in, sol, order_of({"B", "C", "D", "A"}), mode).verdict == Verdict::Invalid);
    CHECK(score_tsp(in, sol, order_of({"A", "C", "B", "D"}), mode).verdict == Verdict::Incorrect);
  }
  const std::vector<std::string> reversed = {"A", "D", "C", "B"};
  CHECK(score_tsp(in, sol, order_of(reversed), TspScoring::Strict).verdict == Verdict::Incorrect);
  CHECK(score_tsp(in, sol, order_of(reversed), TspScoring::LengthOptimal).verdict ==
        Verdict::Correct);
}

TEST_CASE("aggregate") {
  std::vector<EvalRecord> recs(4);
  for (auto& r : recs) {
    r.task = Task::Spp;
    r.config = "4Grid";
    r.verdict = Verdict::Correct;
  }
  recs[3].verdict = Verdict::Incorrect;
  auto report = aggregate(recs);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].accuracy() == doctest::Approx(0.75));

  for (auto& r : recs) r.verdict = Verdict::Unparseable;
  report = aggregate(recs);
  CHECK(report.rows[0].accuracy() == 0.0);
  CHECK(report.rows[0].unparseable == 4);

  recs[0].config = "5Grid";
  recs[1].task = Task::Tsp;
  recs[1].config = "4Obj";
  report = aggregate(recs);
  CHECK(report.rows.size() == 3);
  CHECK(report.find(Task::Spp, "4Grid")->total == 2);

  CHECK_THROWS_AS(aggregate(std::vector<EvalRecord>{}), Error);
  const auto j = to_json(report);
  CHECK(j.contains("rows"));
  CHECK(to_table(report).find("4Grid") != std::string::npos);
}

TEST_CASE("config labels") {
  const auto basic = generate_basic_eval(1, 3);
  CHECK(config_of(*as_eval_item(basic[0])) == "Dir.");
  CHECK(config_of(*as_eval_item(basic[1])) == "Dist.");
  CHECK(config_of(*as_eval_item(basic[2])) == "Loc.");
  CHECK(config_of(*as_eval_item(generate_spp_eval(1, 1, 5)[0])) == "5Grid");
  CHECK(config_of(*as_eval_item(generate_tsp_eval(1, 1, 4)[0])) == "4Obj");
}
