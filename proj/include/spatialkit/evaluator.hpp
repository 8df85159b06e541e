#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "spatialkit/composite.hpp"
#include "spatialkit/instruct.hpp"
#include "spatialkit/parser.hpp"
#include "spatialkit/records.hpp"

namespace spatialkit {

enum class Task { BasicMcq, Spp, Tsp };
enum class Verdict { Correct, Incorrect, Invalid, Unparseable };
enum class TspScoring { Strict, LengthOptimal };

std::string_view to_string(Task task);
std::string_view to_string(Verdict verdict);
std::string_view to_string(TspScoring mode);
std::optional<Task> parse_task(std::string_view text);
std::optional<TspScoring> parse_scoring(std::string_view text);

struct EvalRecord {
  std::string item_id;
  Task task = Task::BasicMcq;
  std::string config;  // "Dir." / "4Grid" / "5Obj", ...
  Verdict verdict = Verdict::Unparseable;
  std::string detail;
};

// Report column for an item: Loc./Dist./Dir. for basic tasks, nGrid for
// SPP and nObj for TSP.
std::string config_of(const EvalItem& item);

// Throw Error(TaskMismatch) when the parsed payload belongs to another task.
EvalRecord score_mcq(const McqItem& item, const ParsedResponse& parsed);
EvalRecord score_spp(const SppInstance& instance, const SppSolution& solution,
                     const ParsedResponse& parsed);
EvalRecord score_tsp(const TspInstance& instance, const TspSolution& solution,
                     const ParsedResponse& parsed,
                     TspScoring mode = TspScoring::Strict);

// Parse `response` with the matching parser and score it.
EvalRecord score_response(const EvalItem& item, std::string_view response,
                          TspScoring mode = TspScoring::Strict);

struct ReportRow {
  Task task = Task::BasicMcq;
  std::string config;
  std::size_t total = 0;
  std::size_t correct = 0;
  std::size_t incorrect = 0;
  std::size_t invalid = 0;
  std::size_t unparseable = 0;

  double accuracy() const {
    return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
  }
};

struct RunReport {
  TspScoring scoring = TspScoring::Strict;
  std::vector<ReportRow> rows;  // sorted by (task, config)

  const ReportRow* find(Task task, std::string_view config) const;
};

/// One row per (task, config). Throws Error(EmptyRun) on no records.
RunReport aggregate(std::span<const EvalRecord> records,
                    TspScoring scoring = TspScoring::Strict);

nlohmann::json to_json(const RunReport& report);
// Accuracy line in the Loc./Dist./Dir. | 4Grid 5Grid | 4Obj 5Obj column order,
// followed by the verdict breakdown.
std::string to_table(const RunReport& report);

}  // namespace spatialkit
