#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spatialkit/geometry.hpp"
#include "spatialkit/scene_gen.hpp"

namespace spatialkit {

// Grid cell as (column, row); row 0 is the bottom row.
struct Cell {
  int col = 0;
  int row = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct SppInstance {
  std::string instance_id;
  int grid_n = 4;
  Cell start;
  Cell end;
  std::vector<Cell> obstacles;  // sorted, empty by default
  std::uint64_t seed = 0;
  std::uint64_t index = 0;

  bool in_grid(Cell c) const {
    return c.col >= 0 && c.row >= 0 && c.col < grid_n && c.row < grid_n;
  }
  bool blocked(Cell c) const;

  friend bool operator==(const SppInstance&, const SppInstance&) = default;
};

struct SppSolution {
  int optimal_length = 0;
  std::vector<Cell> path;  // one optimal path, start..end inclusive
  std::uint64_t optimal_path_count = 0;

  friend bool operator==(const SppSolution&, const SppSolution&) = default;
};

struct SppGenConfig {
  int obstacle_count = 0;
  int max_attempts = 1000;
};

enum class PathDefect {
  None,
  Empty,
  OutOfGrid,
  WrongStart,
  WrongEnd,
  NonAdjacentStep,
  Revisit,
  HitsObstacle,
};

std::string_view to_string(PathDefect defect);

struct PathCheck {
  PathDefect defect = PathDefect::None;
  int steps = 0;
  std::string detail;

  bool valid() const { return defect == PathDefect::None; }
};

// Validity rules shared by the solver tests and the evaluator.
PathCheck check_path(const SppInstance& instance, std::span<const Cell> path);

void validate(const SppInstance& instance);

std::string spp_prefix(int grid_n);  // "spp4"

/// Start and end drawn uniformly among distinct cells; obstacles (if
/// requested) never cover the endpoints and never disconnect them.
SppInstance gen_spp(std::uint64_t master_seed, std::uint64_t index, int grid_n,
                    const SppGenConfig& cfg = {});

/// Breadth-first search with shortest-path counting over the BFS layers.
/// Throws Error(Unreachable) if obstacles separate the endpoints.
SppSolution solve_spp(const SppInstance& instance);

struct TspInstance {
  std::string instance_id;
  std::vector<SceneObject> objects;
  std::string start_label;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;

  friend bool operator==(const TspInstance&, const TspInstance&) = default;
};

struct TspSolution {
  std::vector<std::string> order;  // starts at start_label, no closing repeat
  double tour_length = 0.0;        // closed tour

  friend bool operator==(const TspSolution&, const TspSolution&) = default;
};

inline constexpr int kMaxTspObjects = 12;

void validate(const TspInstance& instance);

// Closed-tour length of `order`; throws Error(InvalidArgument) on unknown
// labels.
double closed_tour_length(const TspInstance& instance,
                          std::span<const std::string> order);

std::string tsp_prefix(int n_objects);  // "tsp5"

// Scene-gen separation rules (minimum distance, region margins); start label
// drawn uniformly.
TspInstance gen_tsp(std::uint64_t master_seed, std::uint64_t index,
                    int n_objects);

/// Exact Held-Karp over subsets with the start fixed. Among equal-length
/// tours the lexicographically smallest label sequence is returned.
/// Throws Error(TooLarge) beyond kMaxTspObjects.
TspSolution solve_tsp(const TspInstance& instance);

}  // namespace spatialkit
