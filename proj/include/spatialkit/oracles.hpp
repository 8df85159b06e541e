#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "spatialkit/composite.hpp"
#include "spatialkit/geometry.hpp"

// Reference computations for cross-checking the solvers and the sector
// classifier. Only the data types are shared with the code under test; every
// distance, angle and search here is recomputed from scratch.
namespace spatialkit::oracles {

enum class Method { PermutationBruteforce, PathEnumeration, MonteCarlo, ScalarMath };

std::string_view to_string(Method method);

template <typename T>
struct OracleResult {
  T value;
  Method method;
};

inline constexpr int kMaxBruteTspObjects = 9;
inline constexpr int kMaxEnumerationGrid = 6;

// Minimum closed-tour length over all (n-1)! orders with the start fixed.
OracleResult<double> brute_tsp(const TspInstance& instance);

// Every shortest path, found by depth-first search over simple paths of
// increasing length.
OracleResult<std::vector<std::vector<Cell>>> enumerate_shortest_paths(
    const SppInstance& instance);

// Eight-way label frequencies ("top", "top-left", ...) of the vector between
// two uniform canvas points, classified by the angle to the nearest axis.
OracleResult<std::map<std::string, double>> monte_carlo_sector_freq(
    const SectorConfig& cfg, std::size_t samples, std::uint64_t seed = 1);

struct SuiteOptions {
  int tsp_instances_per_size = 200;
  std::size_t monte_carlo_samples = 1'000'000;
};

// Held-Karp vs brute force (n = 5..8), BFS length and path count vs
// enumeration on every endpoint pair of 4x4 and 5x5 grids, and sector
// frequencies vs Monte Carlo. Prints one line per check; true if all pass.
bool run_suite(std::ostream& out, const SuiteOptions& options = {});

}  // namespace spatialkit::oracles
