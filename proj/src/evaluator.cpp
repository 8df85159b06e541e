#include "spatialkit/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <fmt/format.h>

#include "spatialkit/errors.hpp"

namespace spatialkit {

namespace {

void require_kind(const ParsedResponse& parsed, ResponseKind expected,
                  std::string_view task) {
  if (parsed.kind != expected && parsed.kind != ResponseKind::Unparseable) {
    throw Error(ErrorCode::TaskMismatch,
                fmt::format("{} scoring got a {} payload", task, to_string(parsed.kind)));
  }
}

std::string basic_config(Capability c) {
  switch (c) {
    case Capability::LocalizationRegion: return "Loc.";
    case Capability::DistanceCompare: return "Dist.";
    case Capability::Direction: return "Dir.";
    default: return std::string(to_string(c));
  }
}

EvalRecord unparseable_record(std::string item_id, Task task, std::string config,
                              const ParsedResponse& parsed) {
  return {std::move(item_id), task, std::move(config), Verdict::Unparseable,
          parsed.diagnostics};
}

}  // namespace

std::string_view to_string(Task task) {
  switch (task) {
    case Task::BasicMcq: return "basic-mcq";
    case Task::Spp: return "spp";
    case Task::Tsp: return "tsp";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Correct: return "correct";
    case Verdict::Incorrect: return "incorrect";
    case Verdict::Invalid: return "invalid";
    case Verdict::Unparseable: return "unparseable";
  }
  return "?";
}

std::string_view to_string(TspScoring mode) {
  return mode == TspScoring::Strict ? "strict" : "length-optimal";
}

std::optional<Task> parse_task(std::string_view text) {
  for (Task t : {Task::BasicMcq, Task::Spp, Task::Tsp}) {
    if (text == to_string(t)) return t;
  }
  return std::nullopt;
}

std::optional<TspScoring> parse_scoring(std::string_view text) {
  for (TspScoring m : {TspScoring::Strict, TspScoring::LengthOptimal}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

std::string config_of(const EvalItem& item) {
  if (const auto* mcq = std::get_if<McqRecord>(&item)) {
    return basic_config(mcq->mcq.item.capability);
  }
  if (const auto* spp = std::get_if<SppRecord>(&item)) {
    return fmt::format("{}Grid", spp->instance.grid_n);
  }
  return fmt::format("{}Obj", std::get<TspRecord>(item).instance.objects.size());
}

EvalRecord score_mcq(const McqItem& item, const ParsedResponse& parsed) {
  require_kind(parsed, ResponseKind::McqChoice, "multiple-choice");
  const std::string config = basic_config(item.item.capability);
  if (parsed.kind == ResponseKind::Unparseable) {
    return unparseable_record(item.item.item_id, Task::BasicMcq, config, parsed);
  }
  const char choice = parsed.choice.value();
  return {item.item.item_id, Task::BasicMcq, config,
          choice == item.answer_key ? Verdict::Correct : Verdict::Incorrect,
          fmt::format("chose {}, key {}", choice, item.answer_key)};
}

EvalRecord score_spp(const SppInstance& instance, const SppSolution& solution,
                     const ParsedResponse& parsed) {
  require_kind(parsed, ResponseKind::CellPath, "SPP");
  const std::string config = fmt::format("{}Grid", instance.grid_n);
  if (parsed.kind == ResponseKind::Unparseable) {
    return unparseable_record(instance.instance_id, Task::Spp, config, parsed);
  }
  const PathCheck check = check_path(instance, parsed.cells);
  if (!check.valid()) {
    return {instance.instance_id, Task::Spp, config, Verdict::Invalid,
            fmt::format("{}: {}", to_string(check.defect), check.detail)};
  }
  return {instance.instance_id, Task::Spp, config,
          check.steps == solution.optimal_length ? Verdict::Correct : Verdict::Incorrect,
          fmt::format("{} steps, optimal {}", check.steps, solution.optimal_length)};
}

EvalRecord score_tsp(const TspInstance& instance, const TspSolution& solution,
                     const ParsedResponse& parsed, TspScoring mode) {
  require_kind(parsed, ResponseKind::VisitOrder, "TSP");
  const std::string config = fmt::format("{}Obj", instance.objects.size());
  if (parsed.kind == ResponseKind::Unparseable) {
    return unparseable_record(instance.instance_id, Task::Tsp, config, parsed);
  }
  const auto& order = parsed.order;
  std::set<std::string> seen(order.begin(), order.end());
  std::set<std::string> expected;
  for (const auto& obj : instance.objects) expected.insert(obj.label);
  if (order.size() != instance.objects.size() || seen != expected) {
    return {instance.instance_id, Task::Tsp, config, Verdict::Invalid,
            fmt::format("order of {} labels is not a permutation of {}",
                        order.size(), expected.size())};
  }
  if (order.front() != instance.start_label) {
    return {instance.instance_id, Task::Tsp, config, Verdict::Invalid,
            fmt::format("starts at {}, not {}", order.front(), instance.start_label)};
  }
  bool correct = false;
  std::string detail;
  if (mode == TspScoring::Strict) {
    correct = order == solution.order;
    detail = correct ? "matches solver order" : "differs from solver order";
  } else {
    const double length = closed_tour_length(instance, order);
    correct = std::abs(length - solution.tour_length) <=
              1e-6 * std::max(1.0, solution.tour_length);
    detail = fmt::format("length {:.3f}, optimal {:.3f}", length, solution.tour_length);
  }
  return {instance.instance_id, Task::Tsp, config,
          correct ? Verdict::Correct : Verdict::Incorrect, std::move(detail)};
}

EvalRecord score_response(const EvalItem& item, std::string_view response,
                          TspScoring mode) {
  EvalRecord record;
  if (const auto* mcq = std::get_if<McqRecord>(&item)) {
    record = score_mcq(mcq->mcq, parse_mcq(response, mcq->mcq.options));
  } else if (const auto* spp = std::get_if<SppRecord>(&item)) {
    record = score_spp(spp->instance, spp->solution,
                       parse_path(response, spp->instance.grid_n));
  } else {
    const auto& tsp = std::get<TspRecord>(item);
    std::vector<std::string> labels;
    for (const auto& obj : tsp.instance.objects) labels.push_back(obj.label);
    record = score_tsp(tsp.instance, tsp.solution, parse_order(response, labels), mode);
  }
  record.item_id = item_id_of(item);
  return record;
}

const ReportRow* RunReport::find(Task task, std::string_view config) const {
  for (const auto& row : rows) {
    if (row.task == task && row.config == config) return &row;
  }
  return nullptr;
}

RunReport aggregate(std::span<const EvalRecord> records, TspScoring scoring) {
  if (records.empty()) throw Error(ErrorCode::EmptyRun, "no records to aggregate");
  std::map<std::pair<Task, std::string>, ReportRow> cells;
  for (const auto& rec : records) {
    auto& row = cells[{rec.task, rec.config}];
    row.task = rec.task;
    row.config = rec.config;
    ++row.total;
    switch (rec.verdict) {
      case Verdict::Correct: ++row.correct; break;
      case Verdict::Incorrect: ++row.incorrect; break;
      case Verdict::Invalid: ++row.invalid; break;
      case Verdict::Unparseable: ++row.unparseable; break;
    }
  }
  RunReport report;
  report.scoring = scoring;
  for (auto& [key, row] : cells) report.rows.push_back(std::move(row));
  return report;
}

nlohmann::json to_json(const RunReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"task", to_string(row.task)},
                    {"config", row.config},
                    {"total", row.total},
                    {"accuracy", row.accuracy()},
                    {"verdicts",
                     {{"correct", row.correct},
                      {"incorrect", row.incorrect},
                      {"invalid", row.invalid},
                      {"unparseable", row.unparseable}}}});
  }
  return {{"tsp_scoring", to_string(report.scoring)}, {"rows", rows}};
}

std::string to_table(const RunReport& report) {
  static const std::pair<Task, std::string_view> kColumns[] = {
      {Task::BasicMcq, "Loc."}, {Task::BasicMcq, "Dist."}, {Task::BasicMcq, "Dir."},
      {Task::Spp, "4Grid"},     {Task::Spp, "5Grid"},      {Task::Tsp, "4Obj"},
      {Task::Tsp, "5Obj"},
  };
  std::string header, values;
  std::set<const ReportRow*> shown;
  for (const auto& [task, config] : kColumns) {
    if (const auto* row = report.find(task, config)) {
      header += fmt::format("{:>8}", config);
      values += fmt::format("{:>8.1f}", 100.0 * row->accuracy());
      shown.insert(row);
    }
  }
  for (const auto& row : report.rows) {
    if (shown.contains(&row)) continue;
    header += fmt::format("{:>8}", row.config);
    values += fmt::format("{:>8.1f}", 100.0 * row.accuracy());
  }

  std::string out = fmt::format("accuracy (%), TSP scoring: {}\n{}\n{}\n\n",
                                to_string(report.scoring), header, values);
  out += fmt::format("{:<10}{:<22}{:>8}{:>9}{:>11}{:>9}{:>13}{:>10}\n", "task",
                     "config", "total", "correct", "incorrect", "invalid",
                     "unparseable", "accuracy");
  for (const auto& row : report.rows) {
    out += fmt::format("{:<10}{:<22}{:>8}{:>9}{:>11}{:>9}{:>13}{:>10.4f}\n",
                       to_string(row.task), row.config, row.total, row.correct,
                       row.incorrect, row.invalid, row.unparseable, row.accuracy());
  }
  return out;
}

}  // namespace spatialkit
