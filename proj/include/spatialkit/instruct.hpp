#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spatialkit/composite.hpp"
#include "spatialkit/geometry.hpp"

namespace spatialkit {

enum class Capability {
  Direction,
  DistanceCompare,
  DistanceNumeric,
  LocalizationRegion,
  LocalizationCoordinate,
  SceneDescription,
};

std::string_view to_string(Capability c);
std::optional<Capability> parse_capability(std::string_view text);

enum class Comparison { Shortest, Shorter, Longer, Longest };

std::string_view to_string(Comparison c);
std::optional<Comparison> parse_comparison(std::string_view text);

// Structured form of a question; enough to recompute its answer from the
// scene alone.
struct Query {
  Capability capability = Capability::Direction;
  // Direction: {reference, target}. Numeric distance: {a, b}.
  // Region / coordinate: {object}. Scene description: empty.
  std::vector<std::string> labels;
  // Distance comparison candidates (3 for shortest/longest, 2 otherwise;
  // 4 in multiple-choice items).
  std::vector<LabelPair> pairs;
  std::optional<Comparison> comparison;
  // Four marks multiple-choice items: four-way directions and spaced
  // option spellings ("top left").
  DirectionMode mode = DirectionMode::Eight;
  int template_index = 0;

  friend bool operator==(const Query&, const Query&) = default;
};

struct InstructionItem {
  std::string item_id;
  std::string scene_id;
  Capability capability = Capability::Direction;
  std::string prompt;
  std::string answer;
  std::string image_ref;
  Query query;

  friend bool operator==(const InstructionItem&, const InstructionItem&) = default;
};

inline constexpr std::array<char, 4> kOptionLetters = {'A', 'B', 'C', 'D'};

struct McqItem {
  InstructionItem item;  // item.answer holds the correct option text
  std::array<std::string, 4> options;
  char answer_key = 'A';

  friend bool operator==(const McqItem&, const McqItem&) = default;
};

inline constexpr int kTrainingItemsPerScene = 17;

// Ground-truth answer text for a query, recomputed through geometry calls.
// Four-way direction queries answer with the spaced phrase ("top left").
std::string ground_truth_answer(const Scene& scene, const Query& query);

// Canonical spellings used in answers and in the response format
// instructions.
std::string format_distance(double d);   // "500.0"
std::string format_point(Point p);       // "(300, 400)"
std::string format_cell(Cell c);         // "(1, 2)"
std::string format_path(std::span<const Cell> path);  // "(0, 0) -> (1, 0)"
// "A -> C -> B -> A": the closing return to the start is spelled out.
std::string format_order(std::span<const std::string> order);

/// The 17 training pairs for one scene: 3 direction, 4 distance comparison
/// (one per comparison phrasing), 3 numeric distance, 3 region, 3 coordinate
/// and one scene description. Requires at least 3 objects.
std::vector<InstructionItem> build_training_bundle(const Scene& scene);

struct McqHints {
  std::optional<int> key_slot;  // 0..3; otherwise drawn from the seed
  std::optional<Direction> target_direction;
  std::optional<Comparison> comparison;  // Shortest or Longest
};

/// Multiple-choice evaluation item. Supported capabilities: Direction (the
/// four diagonal options, pair chosen among diagonal eight-way relations),
/// DistanceCompare (four candidate pairs, shortest or longest) and
/// LocalizationRegion (true region plus three distinct distractors).
McqItem build_eval_mcq(const Scene& scene, Capability capability,
                       std::uint64_t seed, const McqHints& hints = {});

std::string build_spp_prompt(const SppInstance& instance);
std::string build_tsp_prompt(const TspInstance& instance);

}  // namespace spatialkit
