#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spatialkit/geometry.hpp"
#include "spatialkit/rng.hpp"

namespace spatialkit {

struct GenConfig {
  int min_objects = 5;
  int max_objects = 5;
  int min_separation = 80;  // canvas units between any two objects
  int region_margin = 5;    // keep points this far from the 40%/60% lines
  SectorConfig sectors;     // epsilon_exclusion guards sector boundaries
  bool reject_ties = true;
  bool reject_sector_boundaries = true;
  bool reject_region_boundaries = true;
  int max_attempts = 1000;
  // Names the stream: ids are "{prefix}-{master_seed}-{index}" and the prefix
  // salts the per-item RNG, so different prefixes never share scenes.
  std::string id_prefix = "scene";
};

// Throws Error(InvalidArgument) for configurations that can never be valid.
void validate(const GenConfig& cfg);

// First violated scene invariant, or nullopt.
std::optional<std::string> find_violation(const Scene& scene,
                                          const GenConfig& cfg);

// Objects labeled A, B, C, ... at uniform canvas points; no rules applied.
std::vector<SceneObject> sample_objects(Rng& rng, int count);

std::string scene_id(const std::string& prefix, std::uint64_t master_seed,
                     std::uint64_t index);

/// Deterministic function of (master_seed, index, cfg). Whole scenes are
/// resampled until every invariant holds; throws Error(GenerationExhausted)
/// after cfg.max_attempts failures.
Scene sample_scene(std::uint64_t master_seed, std::uint64_t index,
                   const GenConfig& cfg = {});

/// Scenes 0..count-1. `jobs` > 1 fans out over threads; the result is the
/// same list regardless. GenerationExhausted names the failing index.
std::vector<Scene> sample_batch(std::uint64_t master_seed, std::size_t count,
                                const GenConfig& cfg = {}, unsigned jobs = 1);

}  // namespace spatialkit
