#include "spatialkit/instruct.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include <fmt/format.h>

#include "spatialkit/errors.hpp"
#include "spatialkit/rng.hpp"

namespace spatialkit {

namespace {

constexpr std::string_view kCanvasNote =
    "The image shows labeled objects on a 1000 x 1000 canvas, with (0, 0) at "
    "the bottom-left corner and (1000, 1000) at the top-right corner.";

std::vector<LabelPair> unordered_pairs(const Scene& scene) {
  std::vector<LabelPair> pairs;
  const auto& objs = scene.objects;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = i + 1; j < objs.size(); ++j) {
      pairs.push_back({objs[i].label, objs[j].label});
    }
  }
  return pairs;
}

template <typename T>
std::vector<T> take_shuffled(Rng& rng, std::vector<T> pool, std::size_t count) {
  rng.shuffle(std::span(pool));
  pool.resize(std::min(count, pool.size()));
  return pool;
}

std::vector<std::string> labels_of(const Scene& scene) {
  std::vector<std::string> labels;
  for (const auto& obj : scene.objects) labels.push_back(obj.label);
  return labels;
}

std::string join_pairs(const std::vector<LabelPair>& pairs) {
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) out += (i + 1 == pairs.size()) ? " and " : ", ";
    out += pair_text(pairs[i]);
  }
  return out;
}

std::string scene_description(const Scene& scene) {
  std::string out;
  for (const auto& obj : scene.objects) {
    out += fmt::format("{} is in the {} region. ", obj.label,
                       phrase(region_of(obj.point)));
  }
  for (const auto& ref : scene.objects) {
    for (const auto& target : scene.objects) {
      if (&ref == &target) continue;
      out += fmt::format(
          "{} is {} of {}. ", target.label,
          label(direction_sector(ref.point, target.point, DirectionMode::Eight)),
          ref.label);
    }
  }
  if (!out.empty()) out.pop_back();
  return out;
}

std::string render_prompt(const Query& q) {
  const int t = q.template_index;
  switch (q.capability) {
    case Capability::Direction: {
      const auto& ref = q.labels.at(0);
      const auto& target = q.labels.at(1);
      static constexpr std::string_view kForms[] = {
          "What is the direction of {1} relative to {0}?",
          "In which direction is {1} located as seen from {0}?",
          "Looking from {0}, where does {1} lie?",
      };
      return fmt::format(fmt::runtime(kForms[t % 3]), ref, target);
    }
    case Capability::DistanceCompare: {
      const auto cmp = q.comparison.value();
      if (cmp == Comparison::Shortest || cmp == Comparison::Longest) {
        const std::string_view word =
            cmp == Comparison::Shortest ? "shortest" : "longest";
        static constexpr std::string_view kForms[] = {
            "Among the pairs {0}, which pair has the {1} distance?",
            "Which of the pairs {0} is separated by the {1} distance?",
            "Consider the pairs {0}. Which one has the {1} distance between its "
            "objects?",
        };
        return fmt::format(fmt::runtime(kForms[t % 3]), join_pairs(q.pairs), word);
      }
      const std::string_view word = cmp == Comparison::Shorter ? "shorter" : "longer";
      static constexpr std::string_view kForms[] = {
          "Which distance is {2}: {0} or {1}?",
          "Is the distance {0} or the distance {1} {2}?",
          "Compare the pairs {0} and {1}. Which one is {2}?",
      };
      return fmt::format(fmt::runtime(kForms[t % 3]), pair_text(q.pairs.at(0)),
                         pair_text(q.pairs.at(1)), word);
    }
    case Capability::DistanceNumeric: {
      static constexpr std::string_view kForms[] = {
          "{0} What is the distance between {1} and {2}?",
          "{0} How far apart are {1} and {2}?",
          "{0} Estimate the distance from {1} to {2}.",
      };
      return fmt::format(fmt::runtime(kForms[t % 3]), kCanvasNote,
                         q.labels.at(0), q.labels.at(1));
    }
    case Capability::LocalizationRegion: {
      static constexpr std::string_view kForms[] = {
          "In which region of the image is {0} located?",
          "Which part of the image contains {0}?",
          "Where in the image is {0}?",
      };
      return fmt::format(fmt::runtime(kForms[t % 3]), q.labels.at(0));
    }
    case Capability::LocalizationCoordinate: {
      static constexpr std::string_view kForms[] = {
          "{0} What are the coordinates of {1}?",
          "{0} Give the position of {1} as (x, y).",
          "{0} Where exactly is {1}? Answer with its coordinates.",
      };
      return fmt::format(fmt::runtime(kForms[t % 3]), kCanvasNote, q.labels.at(0));
    }
    case Capability::SceneDescription: {
      static constexpr std::string_view kForms[] = {
          "Describe the spatial relationships between the objects in the image.",
          "Explain where each object is and how the objects are positioned "
          "relative to each other.",
          "Give an overview of the spatial layout of the labeled objects.",
      };
      return std::string(kForms[t % 3]);
    }
  }
  return {};
}

InstructionItem make_item(const Scene& scene, Query query, int ordinal, Rng& rng) {
  query.template_index = static_cast<int>(rng.index(3));
  InstructionItem item;
  item.item_id = fmt::format("{}-q{:02}", scene.scene_id, ordinal);
  item.scene_id = scene.scene_id;
  item.capability = query.capability;
  item.prompt = render_prompt(query);
  item.answer = ground_truth_answer(scene, query);
  item.image_ref = "images/" + scene.scene_id + ".png";
  item.query = std::move(query);
  return item;
}

}  // namespace

std::string_view to_string(Capability c) {
  switch (c) {
    case Capability::Direction: return "direction";
    case Capability::DistanceCompare: return "distance-compare";
    case Capability::DistanceNumeric: return "distance-numeric";
    case Capability::LocalizationRegion: return "localization-region";
    case Capability::LocalizationCoordinate: return "localization-coordinate";
    case Capability::SceneDescription: return "scene-description";
  }
  return "?";
}

std::optional<Capability> parse_capability(std::string_view text) {
  for (auto c : {Capability::Direction, Capability::DistanceCompare,
                 Capability::DistanceNumeric, Capability::LocalizationRegion,
                 Capability::LocalizationCoordinate,
                 Capability::SceneDescription}) {
    if (text == to_string(c)) return c;
  }
  return std::nullopt;
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::Shortest: return "shortest";
    case Comparison::Shorter: return "shorter";
    case Comparison::Longer: return "longer";
    case Comparison::Longest: return "longest";
  }
  return "?";
}

std::optional<Comparison> parse_comparison(std::string_view text) {
  for (auto c : {Comparison::Shortest, Comparison::Shorter, Comparison::Longer,
                 Comparison::Longest}) {
    if (text == to_string(c)) return c;
  }
  return std::nullopt;
}

std::string format_distance(double d) { return fmt::format("{:.1f}", d); }

std::string format_point(Point p) { return fmt::format("({}, {})", p.x, p.y); }

std::string format_cell(Cell c) { return fmt::format("({}, {})", c.col, c.row); }

std::string format_path(std::span<const Cell> path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += " -> ";
    out += format_cell(path[i]);
  }
  return out;
}

std::string format_order(std::span<const std::string> order) {
  if (order.empty()) return {};
  std::string out;
  for (const auto& label : order) out += label + " -> ";
  return out + order.front();
}

std::string ground_truth_answer(const Scene& scene, const Query& q) {
  switch (q.capability) {
    case Capability::Direction: {
      const Direction d = direction_sector(scene.at(q.labels.at(0)),
                                           scene.at(q.labels.at(1)), q.mode);
      return std::string(q.mode == DirectionMode::Four ? phrase(d) : label(d));
    }
    case Capability::DistanceCompare: {
      const auto ranking = rank_pairs_by_distance(scene, q.pairs);
      switch (q.comparison.value()) {
        case Comparison::Shortest:
        case Comparison::Shorter:
          return pair_text(q.pairs[ranking.argmin]);
        case Comparison::Longer:
        case Comparison::Longest:
          return pair_text(q.pairs[ranking.argmax]);
      }
      break;
    }
    case Capability::DistanceNumeric:
      return format_distance(
          euclidean_distance(scene.at(q.labels.at(0)), scene.at(q.labels.at(1))));
    case Capability::LocalizationRegion: {
      const Region r = region_of(scene.at(q.labels.at(0)));
      return std::string(q.mode == DirectionMode::Four ? phrase(r) : label(r));
    }
    case Capability::LocalizationCoordinate:
      return format_point(scene.at(q.labels.at(0)));
    case Capability::SceneDescription:
      return scene_description(scene);
  }
  throw Error(ErrorCode::InvalidArgument, "unsupported query");
}

std::vector<InstructionItem> build_training_bundle(const Scene& scene) {
  if (scene.objects.size() < 3) {
    throw Error(ErrorCode::InvalidArgument,
                scene.scene_id + ": training bundle needs at least 3 objects");
  }
  Rng rng(derive_seed(scene.seed, scene.index, fnv1a(scene.scene_id + "/bundle")));
  const auto pairs = unordered_pairs(scene);
  const auto labels = labels_of(scene);

  std::vector<InstructionItem> items;
  items.reserve(kTrainingItemsPerScene);
  int ordinal = 0;
  auto add = [&](Query q) { items.push_back(make_item(scene, std::move(q), ordinal++, rng)); };

  for (auto pair : take_shuffled(rng, pairs, 3)) {
    if (rng.index(2) == 1) std::swap(pair.first, pair.second);
    add({.capability = Capability::Direction, .labels = {pair.first, pair.second}});
  }
  for (Comparison cmp : {Comparison::Shortest, Comparison::Shorter,
                         Comparison::Longer, Comparison::Longest}) {
    const std::size_t k =
        (cmp == Comparison::Shortest || cmp == Comparison::Longest) ? 3 : 2;
    add({.capability = Capability::DistanceCompare,
         .pairs = take_shuffled(rng, pairs, k),
         .comparison = cmp});
  }
  for (const auto& pair : take_shuffled(rng, pairs, 3)) {
    add({.capability = Capability::DistanceNumeric, .labels = {pair.first, pair.second}});
  }
  for (const auto& l : take_shuffled(rng, labels, 3)) {
    add({.capability = Capability::LocalizationRegion, .labels = {l}});
  }
  for (const auto& l : take_shuffled(rng, labels, 3)) {
    add({.capability = Capability::LocalizationCoordinate, .labels = {l}});
  }
  add({.capability = Capability::SceneDescription});
  return items;
}

McqItem build_eval_mcq(const Scene& scene, Capability capability,
                       std::uint64_t seed, const McqHints& hints) {
  Rng rng(derive_seed(seed, scene.index, fnv1a(scene.scene_id + "/mcq")));
  Query q{.capability = capability, .mode = DirectionMode::Four};
  std::vector<std::string> distractors;
  std::string question;

  switch (capability) {
    case Capability::Direction: {
      // Only pairs that are diagonal in the eight-way partition, so the
      // four-way answer is visually unambiguous.
      std::vector<std::pair<LabelPair, Direction>> candidates;
      for (const auto& a : scene.objects) {
        for (const auto& b : scene.objects) {
          if (&a == &b) continue;
          const auto d8 = direction_sector(a.point, b.point, DirectionMode::Eight);
          if (is_diagonal(d8)) candidates.push_back({{a.label, b.label}, d8});
        }
      }
      if (candidates.empty()) {
        throw Error(ErrorCode::InvalidArgument,
                    scene.scene_id + ": no diagonal pair for a direction question");
      }
      if (hints.target_direction) {
        std::vector<std::pair<LabelPair, Direction>> matching;
        for (const auto& c : candidates) {
          if (c.second == *hints.target_direction) matching.push_back(c);
        }
        if (!matching.empty()) candidates = std::move(matching);
      }
      const auto& chosen = candidates[rng.index(candidates.size())].first;
      q.labels = {chosen.first, chosen.second};
      q.template_index = static_cast<int>(rng.index(3));
      for (Direction d : kDiagonalDirections) distractors.emplace_back(phrase(d));
      break;
    }
    case Capability::DistanceCompare: {
      auto pairs = unordered_pairs(scene);
      if (pairs.size() < 4) {
        throw Error(ErrorCode::InvalidArgument,
                    scene.scene_id + ": distance question needs 4 pairs");
      }
      q.pairs = take_shuffled(rng, std::move(pairs), 4);
      q.comparison = hints.comparison.value_or(
          rng.index(2) == 0 ? Comparison::Shortest : Comparison::Longest);
      if (*q.comparison != Comparison::Shortest &&
          *q.comparison != Comparison::Longest) {
        throw Error(ErrorCode::InvalidArgument,
                    "multiple-choice distance questions are shortest or longest");
      }
      q.template_index = static_cast<int>(rng.index(3));
      for (const auto& p : q.pairs) distractors.push_back(pair_text(p));
      break;
    }
    case Capability::LocalizationRegion: {
      const auto& obj = scene.objects[rng.index(scene.objects.size())];
      q.labels = {obj.label};
      q.template_index = static_cast<int>(rng.index(3));
      const Region truth = region_of(obj.point);
      std::vector<std::string> others;
      for (Region r : kAllRegions) {
        if (r != truth) others.emplace_back(phrase(r));
      }
      distractors = take_shuffled(rng, std::move(others), 3);
      distractors.emplace_back(phrase(truth));
      break;
    }
    default:
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("{} has no multiple-choice form", to_string(capability)));
  }

  const std::string answer = ground_truth_answer(scene, q);
  std::erase(distractors, answer);
  rng.shuffle(std::span(distractors));
  const int slot = hints.key_slot.value_or(static_cast<int>(rng.index(4)));
  if (slot < 0 || slot > 3 || distractors.size() != 3) {
    throw Error(ErrorCode::InvalidArgument, "could not assemble four options");
  }

  McqItem mcq;
  mcq.answer_key = kOptionLetters[static_cast<std::size_t>(slot)];
  for (std::size_t i = 0, d = 0; i < 4; ++i) {
    mcq.options[i] = (static_cast<int>(i) == slot) ? answer : distractors[d++];
  }

  std::string prompt =
      capability == Capability::DistanceCompare
          ? fmt::format("Which pair of objects has the {} distance?",
                        to_string(*q.comparison))
          : render_prompt(q);
  for (std::size_t i = 0; i < 4; ++i) {
    prompt += fmt::format("\n{}. {}", kOptionLetters[i], mcq.options[i]);
  }
  prompt += "\nAnswer with the letter of the correct option.";

  mcq.item.item_id = scene.scene_id;
  mcq.item.scene_id = scene.scene_id;
  mcq.item.capability = capability;
  mcq.item.prompt = std::move(prompt);
  mcq.item.answer = answer;
  mcq.item.image_ref = "images/" + scene.scene_id + ".png";
  mcq.item.query = std::move(q);
  return mcq;
}

std::string build_spp_prompt(const SppInstance& inst) {
  std::string prompt = fmt::format(
      "The image shows a {0}x{0} grid. Cells are written as (column, row), "
      "with (0, 0) at the bottom-left cell and ({1}, {1}) at the top-right "
      "cell. The start object S is at {2} and the end object E is at {3}.",
      inst.grid_n, inst.grid_n - 1, format_cell(inst.start), format_cell(inst.end));
  if (!inst.obstacles.empty()) {
    std::vector<Cell> cells(inst.obstacles);
    prompt += " Gray cells are walls and cannot be entered: " +
              format_path(cells) + ".";
  }
  prompt +=
      " Moving one cell up, down, left or right at each step, find the "
      "shortest path from S to E. Answer with the sequence of cells from S to "
      "E in the form (c, r) -> (c, r) -> ... -> (c, r).";
  return prompt;
}

std::string build_tsp_prompt(const TspInstance& inst) {
  std::vector<std::string> labels;
  for (const auto& obj : inst.objects) labels.push_back(obj.label);
  std::string listing;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) listing += ", ";
    listing += labels[i];
  }
  return fmt::format(
      "The image shows {0} labeled objects: {1}. Starting from object {2}, find "
      "the shortest route that visits every object exactly once and returns to "
      "{2}. The route must begin at {2}. Answer with the visiting order as a "
      "sequence of labels in the form {2} -> ... -> {2}.",
      labels.size(), listing, inst.start_label);
}

}  // namespace spatialkit
