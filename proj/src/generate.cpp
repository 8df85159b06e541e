#include "spatialkit/generate.hpp"

#include <array>
#include <numeric>

#include <fmt/format.h>

#include "spatialkit/errors.hpp"
#include "spatialkit/parallel.hpp"
#include "spatialkit/rng.hpp"

namespace spatialkit {

namespace {

// Seeded permutation of {0,1,2,3} for block `block` of stream `stream`.
std::array<int, 4> block_permutation(std::uint64_t seed, std::size_t block,
                                     std::string_view stream) {
  std::array<int, 4> perm{0, 1, 2, 3};
  Rng rng(derive_seed(seed, block, fnv1a(stream)));
  rng.shuffle(std::span<int>(perm));
  return perm;
}

void require_count(std::size_t count) {
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "count must be at least 1");
}

}  // namespace

std::vector<ManifestRecord> generate_training(std::uint64_t seed,
                                              std::size_t scenes,
                                              const GenConfig& cfg,
                                              unsigned jobs) {
  require_count(scenes);
  std::vector<std::vector<InstructionItem>> bundles(scenes);
  std::vector<Scene> sampled(scenes);
  parallel_for(scenes, jobs, [&](std::size_t i) {
    sampled[i] = sample_scene(seed, i, cfg);
    bundles[i] = build_training_bundle(sampled[i]);
  });

  std::vector<ManifestRecord> records;
  records.reserve(scenes * kTrainingItemsPerScene);
  for (std::size_t i = 0; i < scenes; ++i) {
    for (auto& item : bundles[i]) {
      records.emplace_back(TrainRecord{std::move(item), sampled[i]});
    }
  }
  return records;
}

std::vector<ManifestRecord> generate_basic_eval(
    std::uint64_t seed, std::size_t count,
    std::span<const Capability> capabilities, unsigned jobs) {
  require_count(count);
  if (capabilities.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no capabilities requested");
  }
  GenConfig cfg;
  cfg.id_prefix = "basic";

  std::vector<ManifestRecord> records(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    const Capability cap = capabilities[i % capabilities.size()];
    const std::size_t k = i / capabilities.size();  // position within capability
    const std::string stream(to_string(cap));

    McqHints hints;
    hints.key_slot = block_permutation(seed, k / 4, stream + "/key")[k % 4];
    if (cap == Capability::Direction) {
      hints.target_direction = kDiagonalDirections[static_cast<std::size_t>(
          block_permutation(seed, k / 4, stream + "/target")[k % 4])];
    }
    if (cap == Capability::DistanceCompare) {
      hints.comparison = (k % 2 == 0) ? Comparison::Shortest : Comparison::Longest;
    }
    Scene scene = sample_scene(seed, i, cfg);
    McqItem mcq = build_eval_mcq(scene, cap, seed, hints);
    records[i] = McqRecord{std::move(mcq), std::move(scene)};
  });
  return records;
}

std::vector<ManifestRecord> generate_spp_eval(std::uint64_t seed,
                                              std::size_t count, int grid_n,
                                              const SppGenConfig& cfg,
                                              unsigned jobs) {
  require_count(count);
  std::vector<ManifestRecord> records(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    SppRecord rec;
    rec.instance = gen_spp(seed, i, grid_n, cfg);
    rec.solution = solve_spp(rec.instance);
    rec.item_id = rec.instance.instance_id;
    rec.prompt = build_spp_prompt(rec.instance);
    rec.image_ref = "images/" + rec.item_id + ".png";
    records[i] = std::move(rec);
  });
  return records;
}

std::vector<ManifestRecord> generate_tsp_eval(std::uint64_t seed,
                                              std::size_t count, int n_objects,
                                              unsigned jobs) {
  require_count(count);
  std::vector<ManifestRecord> records(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    TspRecord rec;
    rec.instance = gen_tsp(seed, i, n_objects);
    rec.solution = solve_tsp(rec.instance);
    rec.item_id = rec.instance.instance_id;
    rec.prompt = build_tsp_prompt(rec.instance);
    rec.image_ref = "images/" + rec.item_id + ".png";
    records[i] = std::move(rec);
  });
  return records;
}

}  // namespace spatialkit
