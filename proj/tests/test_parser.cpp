#include "doctest.h"
#include "spatialkit/parser.hpp"

using namespace spatialkit;

namespace {

const std::vector<std::string> kLabels = {"A", "B", "C", "D"};

std::vector<Cell> cells(std::initializer_list<Cell> c) { return c; }

}  // namespace

TEST_CASE("mcq examples") {
  CHECK(parse_mcq("The answer is (B).").choice == 'B');
  CHECK(parse_mcq("Could be A... no, final answer: D").choice == 'D');
  CHECK(parse_mcq("").kind == ResponseKind::Unparseable);
  CHECK(parse_mcq("Answer: c").choice == 'C');
  CHECK(parse_mcq("**Answer:** [A]").choice == 'A');
  CHECK(parse_mcq("The answer is option D").choice == 'D');
  CHECK(parse_mcq("B").choice == 'B');
  CHECK(parse_mcq("(C)").choice == 'C');
}

TEST_CASE("mcq rejects letters outside A-D and disagreeing letters") {
  CHECK(parse_mcq("The answer is (E).").kind == ResponseKind::Unparseable);
  CHECK(parse_mcq("A or B, I am not sure").kind == ResponseKind::Unparseable);
  CHECK(parse_mcq("I cannot tell from this picture.").kind == ResponseKind::Unparseable);
  // "answer a" without "is" or a colon is not an answer statement.
  CHECK(parse_mcq("I will answer a question").kind == ResponseKind::Unparseable);
}

TEST_CASE("mcq option text fallback") {
  const std::vector<std::string> options = {"top left", "top right", "bottom left", "bottom right"};
  CHECK(parse_mcq("It lies to the bottom left.", options).choice == 'C');
  CHECK(parse_mcq("somewhere top right of it", options).choice == 'B');
  CHECK(parse_mcq("top left or bottom right", options).kind == ResponseKind::Unparseable);

  const std::vector<std::string> nested = {"top", "top left", "center", "left"};
  CHECK(parse_mcq("It is at the top left.", nested).choice == 'B');
}

TEST_CASE("path examples") {
  auto r = parse_path("(0,0) -> (1,0) -> (1,1)", 4);
  CHECK(r.kind == ResponseKind::CellPath);
  CHECK(r.cells == cells({{0, 0}, {1, 0}, {1, 1}}));

  CHECK(parse_path("[(0,0),(9,9)]", 4).kind == ResponseKind::Unparseable);

  r = parse_path("I would begin at the corner (0,0), then (0,1) seems best.", 4);
  CHECK(r.cells == cells({{0, 0}, {0, 1}}));

  r = parse_path("Grid is 4x4 with S at (0, 0) and E at (2, 0). Path: (0, 0), (1, 0), (2, 0)", 4);
  CHECK(r.cells == cells({{0, 0}, {1, 0}, {2, 0}}));

  CHECK(parse_path("no cells here", 4).kind == ResponseKind::Unparseable);
  CHECK(parse_path("", 4).kind == ResponseKind::Unparseable);
}

TEST_CASE("path ties go to the last run") {
  const auto r = parse_path("First try (0, 0) -> (0, 1). Better: (0, 0) -> (1, 0).", 4);
  CHECK(r.cells == cells({{0, 0}, {1, 0}}));
}

TEST_CASE("order examples") {
  auto r = parse_order("A -> C -> B -> D -> A", kLabels);
  CHECK(r.kind == ResponseKind::VisitOrder);
  CHECK(r.order == std::vector<std::string>{"A", "C", "B", "D"});

  r = parse_order("visit B first", kLabels);
  CHECK(r.order == std::vector<std::string>{"B"});

  r = parse_order("A, B, B, C, D", kLabels);
  CHECK(r.order == std::vector<std::string>{"A", "B", "C", "D"});

  r = parse_order("Starting from a, go to c, then b, then d and back to a.", kLabels);
  CHECK(r.order == std::vector<std::string>{"A", "C", "B", "D"});

  CHECK(parse_order("", kLabels).kind == ResponseKind::Unparseable);
  CHECK(parse_order("no labels at all", std::vector<std::string>{"X", "Y", "Z"}).kind ==
        ResponseKind::Unparseable);
}
