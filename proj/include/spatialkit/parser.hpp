#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spatialkit/composite.hpp"

namespace spatialkit {

enum class ResponseKind { McqChoice, CellPath, VisitOrder, Unparseable };

std::string_view to_string(ResponseKind kind);

// Structured answer extracted from free text. Exactly one payload is set,
// matching `kind`; unparseable results explain themselves in `diagnostics`.
struct ParsedResponse {
  ResponseKind kind = ResponseKind::Unparseable;
  std::optional<char> choice;
  std::vector<Cell> cells;
  std::vector<std::string> order;
  std::string diagnostics;

  static ParsedResponse unparseable(std::string why);

  friend bool operator==(const ParsedResponse&, const ParsedResponse&) = default;
};

/// Multiple-choice letter, by precedence:
///   1. the last "answer is (X)" / "answer: X" with X in A-D;
///   2. a standalone option letter, if all such letters agree;
///   3. a unique case-insensitive match of one option's full text.
ParsedResponse parse_mcq(std::string_view text,
                         std::span<const std::string> options = {});

/// Longest run of "(c, r)" tuples joined only by separators (commas, arrows,
/// brackets, "then", ...); the last run wins ties. Any tuple of that run
/// outside the grid makes the response unparseable.
ParsedResponse parse_path(std::string_view text, int grid_n);

/// Known labels in order of appearance with immediate duplicates collapsed;
/// a final repeat of the first label (closing the tour) is dropped.
ParsedResponse parse_order(std::string_view text,
                           std::span<const std::string> labels);

}  // namespace spatialkit
