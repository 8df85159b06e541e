#include "spatialkit/agents.hpp"

#include <algorithm>
#include <vector>

#include <fmt/format.h>

#include "spatialkit/instruct.hpp"
#include "spatialkit/rng.hpp"

namespace spatialkit {

namespace {

std::string mcq_text(char letter, int style) {
  switch (style) {
    case 0: return fmt::format("After comparing the objects in the image, the answer is ({}).", letter);
    case 1: return fmt::format("**{}**", letter);
    default: return fmt::format("Final answer: {}", letter);
  }
}

std::string path_text(const std::vector<Cell>& cells, int style) {
  switch (style) {
    case 0: {
      std::string steps;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) steps += ", then ";
        steps += format_cell(cells[i]);
      }
      return fmt::format("I start at {} and the shortest route is {}. That reaches the end.",
                         cells.empty() ? std::string("S") : format_cell(cells.front()), steps);
    }
    case 1: return format_path(cells);
    default: {
      std::string out = "[";
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_cell(cells[i]);
      }
      return out + "]";
    }
  }
}

std::string order_text(const std::vector<std::string>& order, int style) {
  switch (style) {
    case 0: {
      std::string steps;
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0) steps += ", then ";
        steps += order[i];
      }
      return fmt::format("Starting from {}, the best route is {}, and finally back to {}.",
                         order.front(), steps, order.front());
    }
    case 1: return format_order(order);
    default: {
      std::string out = "[";
      for (const auto& label : order) out += label + ", ";
      return out + order.front() + "]";
    }
  }
}

std::vector<std::string> random_order(Rng& rng, const TspInstance& inst) {
  std::vector<std::string> rest;
  for (const auto& obj : inst.objects) {
    if (obj.label != inst.start_label) rest.push_back(obj.label);
  }
  rng.shuffle(std::span(rest));
  rest.insert(rest.begin(), inst.start_label);
  return rest;
}

std::vector<Cell> random_walk(Rng& rng, const SppInstance& inst) {
  static constexpr Cell kSteps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  std::vector<Cell> path{inst.start};
  const int limit = 2 * inst.grid_n * inst.grid_n;
  while (path.back() != inst.end && static_cast<int>(path.size()) < limit) {
    std::vector<Cell> options;
    for (Cell s : kSteps) {
      const Cell next{path.back().col + s.col, path.back().row + s.row};
      if (inst.in_grid(next) && !inst.blocked(next)) options.push_back(next);
    }
    path.push_back(options[rng.index(options.size())]);
  }
  return path;
}

std::string oracle(const EvalItem& item, int style) {
  if (const auto* mcq = std::get_if<McqRecord>(&item)) {
    return mcq_text(mcq->mcq.answer_key, style);
  }
  if (const auto* spp = std::get_if<SppRecord>(&item)) {
    return path_text(spp->solution.path, style);
  }
  return order_text(std::get<TspRecord>(item).solution.order, style);
}

std::string random_answer(const EvalItem& item, int style, Rng& rng) {
  if (std::holds_alternative<McqRecord>(item)) {
    return mcq_text(kOptionLetters[rng.index(4)], style);
  }
  if (const auto* spp = std::get_if<SppRecord>(&item)) {
    return path_text(random_walk(rng, spp->instance), style);
  }
  return order_text(random_order(rng, std::get<TspRecord>(item).instance), style);
}

std::string adversarial(const EvalItem& item, int style) {
  if (std::holds_alternative<McqRecord>(item)) {
    switch (style) {
      case 0: return "";
      case 1: return "The answer is (E).";
      default: return "I cannot tell from this picture.";
    }
  }
  if (const auto* spp = std::get_if<SppRecord>(&item)) {
    const auto& inst = spp->instance;
    switch (style) {
      case 0: {
        // Diagonal first move, then straight to the end column and row.
        const Cell s = inst.start;
        const Cell diag{s.col + (s.col + 1 < inst.grid_n ? 1 : -1),
                        s.row + (s.row + 1 < inst.grid_n ? 1 : -1)};
        return format_path(std::vector<Cell>{s, diag, inst.end});
      }
      case 1:
        return format_path(std::vector<Cell>{inst.start, {inst.grid_n, inst.grid_n}, inst.end});
      default: return "";
    }
  }
  const auto& tsp = std::get<TspRecord>(item);
  std::vector<std::string> order = tsp.solution.order;
  switch (style) {
    case 0:
      order.pop_back();
      return format_order(order);
    case 1:
      std::rotate(order.begin(), order.begin() + 1, order.end());
      return format_order(order);
    default: return "";
  }
}

}  // namespace

std::string_view to_string(AgentKind kind) {
  switch (kind) {
    case AgentKind::Oracle: return "oracle";
    case AgentKind::Random: return "random";
    case AgentKind::Adversarial: return "adversarial";
  }
  return "?";
}

std::optional<AgentKind> parse_agent_kind(std::string_view text) {
  for (auto k : {AgentKind::Oracle, AgentKind::Random, AgentKind::Adversarial}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

std::string respond(const AgentSpec& spec, const EvalItem& item) {
  Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(spec.kind),
                      fnv1a(item_id_of(item))));
  const int style = spec.phrasing_style >= 0
                        ? spec.phrasing_style % kPhrasingStyles
                        : static_cast<int>(rng.index(kPhrasingStyles));
  switch (spec.kind) {
    case AgentKind::Oracle: return oracle(item, style);
    case AgentKind::Random: return random_answer(item, style, rng);
    case AgentKind::Adversarial: return adversarial(item, style);
  }
  return {};
}

}  // namespace spatialkit
