#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spatialkit/composite.hpp"
#include "spatialkit/instruct.hpp"
#include "spatialkit/records.hpp"
#include "spatialkit/scene_gen.hpp"

namespace spatialkit {

inline constexpr Capability kMcqCapabilities[] = {
    Capability::Direction, Capability::DistanceCompare,
    Capability::LocalizationRegion};

// 17 records per scene, scenes from the "scene" stream.
std::vector<ManifestRecord> generate_training(std::uint64_t seed,
                                              std::size_t scenes,
                                              const GenConfig& cfg = {},
                                              unsigned jobs = 1);

/// Multiple-choice items, one scene each (stream "basic"). Item i asks
/// about capabilities[i % size]. Within each capability, answer-key slots
/// and direction targets are balanced over consecutive blocks of four
/// items using seeded permutations; distance items alternate shortest and
/// longest.
std::vector<ManifestRecord> generate_basic_eval(
    std::uint64_t seed, std::size_t count,
    std::span<const Capability> capabilities = kMcqCapabilities,
    unsigned jobs = 1);

std::vector<ManifestRecord> generate_spp_eval(std::uint64_t seed,
                                              std::size_t count, int grid_n,
                                              const SppGenConfig& cfg = {},
                                              unsigned jobs = 1);

std::vector<ManifestRecord> generate_tsp_eval(std::uint64_t seed,
                                              std::size_t count,
                                              int n_objects, unsigned jobs = 1);

}  // namespace spatialkit
