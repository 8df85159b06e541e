#include "spatialkit/scene_gen.hpp"


#include <fmt/format.h>

#include "spatialkit/errors.hpp"
#include "spatialkit/parallel.hpp"

namespace spatialkit {

namespace {

std::string letter_label(int i) {
  return std::string(1, static_cast<char>('A' + i));
}

bool near_region_line(int v, int margin) {
  for (int line : {400, 600}) {
    if (std::abs(v - line) < margin) return true;
  }
  return false;
}

}  // namespace

void validate(const GenConfig& cfg) {
  if (cfg.min_objects < 2 || cfg.max_objects < cfg.min_objects ||
      cfg.max_objects > 26) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("object count range [{}, {}] is invalid",
                            cfg.min_objects, cfg.max_objects));
  }
  if (cfg.min_separation <= 0) {
    throw Error(ErrorCode::InvalidArgument, "min_separation must be positive");
  }
  if (!(cfg.sectors.cardinal_half_width > 0.0 &&
        cfg.sectors.cardinal_half_width < 45.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "cardinal_half_width must lie in (0, 45)");
  }
  if (cfg.max_attempts < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_attempts must be positive");
  }
}

std::optional<std::string> find_violation(const Scene& scene,
                                          const GenConfig& cfg) {
  const auto& objs = scene.objects;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const Point p = objs[i].point;
    if (!in_canvas(p)) return fmt::format("{} is off the canvas", objs[i].label);
    if (cfg.reject_region_boundaries &&
        (near_region_line(p.x, cfg.region_margin) ||
         near_region_line(p.y, cfg.region_margin))) {
      return fmt::format("{} is within {} of a region boundary", objs[i].label,
                         cfg.region_margin);
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (objs[i].label == objs[j].label) {
        return fmt::format("duplicate label {}", objs[i].label);
      }
      const Point q = objs[j].point;
      if (euclidean_distance(p, q) < cfg.min_separation) {
        return fmt::format("{} and {} closer than {}", objs[j].label,
                           objs[i].label, cfg.min_separation);
      }
      if (cfg.reject_sector_boundaries) {
        if (p.x == q.x || p.y == q.y) {
          return fmt::format("{}-{} lies on an axis", objs[j].label,
                             objs[i].label);
        }
        if (boundary_gap_degrees(q, p, cfg.sectors) <
            cfg.sectors.epsilon_exclusion) {
          return fmt::format("{}-{} is near a sector boundary", objs[j].label,
                             objs[i].label);
        }
      }
    }
  }
  if (cfg.reject_ties && objs.size() >= 3) {
    std::vector<LabelPair> pairs;
    for (std::size_t i = 0; i < objs.size(); ++i) {
      for (std::size_t j = i + 1; j < objs.size(); ++j) {
        pairs.push_back({objs[i].label, objs[j].label});
      }
    }
    try {
      rank_pairs_by_distance(scene, pairs);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TieDetected) throw;
      return std::string(e.what());
    }
  }
  return std::nullopt;
}

std::vector<SceneObject> sample_objects(Rng& rng, int count) {
  std::vector<SceneObject> objects;
  objects.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Point p{rng.uniform_int(0, kCanvasSize), rng.uniform_int(0, kCanvasSize)};
    objects.push_back({letter_label(i), p});
  }
  return objects;
}

std::string scene_id(const std::string& prefix, std::uint64_t master_seed,
                     std::uint64_t index) {
  return fmt::format("{}-{}-{:06}", prefix, master_seed, index);
}

Scene sample_scene(std::uint64_t master_seed, std::uint64_t index,
                   const GenConfig& cfg) {
  validate(cfg);
  Scene scene;
  scene.scene_id = scene_id(cfg.id_prefix, master_seed, index);
  scene.seed = master_seed;
  scene.index = index;

  Rng rng(derive_seed(master_seed, index, fnv1a(cfg.id_prefix)));
  std::string last_violation;
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    const int n = rng.uniform_int(cfg.min_objects, cfg.max_objects);
    scene.objects = sample_objects(rng, n);
    auto violation = find_violation(scene, cfg);
    if (!violation) return scene;
    last_violation = std::move(*violation);
  }
  throw Error(ErrorCode::GenerationExhausted,
              fmt::format("{}: {} attempts rejected (last: {})", scene.scene_id,
                          cfg.max_attempts, last_violation));
}

std::vector<Scene> sample_batch(std::uint64_t master_seed, std::size_t count,
                                const GenConfig& cfg, unsigned jobs) {
  if (count == 0) {
    throw Error(ErrorCode::InvalidArgument, "batch count must be at least 1");
  }
  validate(cfg);
  std::vector<Scene> scenes(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    try {
      scenes[i] = sample_scene(master_seed, i, cfg);
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("scene index {}: {}", i, e.what()));
    }
  });
  return scenes;
}

}  // namespace spatialkit
