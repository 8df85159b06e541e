#include "spatialkit/composite.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "spatialkit/errors.hpp"
#include "spatialkit/rng.hpp"

namespace spatialkit {

namespace {

constexpr Cell kSteps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

std::string cell_text(Cell c) { return fmt::format("({}, {})", c.col, c.row); }

}  // namespace

bool SppInstance::blocked(Cell c) const {
  return std::binary_search(obstacles.begin(), obstacles.end(), c);
}

std::string_view to_string(PathDefect defect) {
  switch (defect) {
    case PathDefect::None: return "none";
    case PathDefect::Empty: return "empty";
    case PathDefect::OutOfGrid: return "out-of-grid";
    case PathDefect::WrongStart: return "wrong-start";
    case PathDefect::WrongEnd: return "wrong-end";
    case PathDefect::NonAdjacentStep: return "non-adjacent-step";
    case PathDefect::Revisit: return "revisit";
    case PathDefect::HitsObstacle: return "hits-obstacle";
  }
  return "?";
}

PathCheck check_path(const SppInstance& instance, std::span<const Cell> path) {
  auto fail = [](PathDefect d, std::string detail) {
    return PathCheck{d, 0, std::move(detail)};
  };
  if (path.empty()) return fail(PathDefect::Empty, "no cells");
  for (Cell c : path) {
    if (!instance.in_grid(c)) {
      return fail(PathDefect::OutOfGrid, cell_text(c) + " is off the grid");
    }
  }
  if (path.front() != instance.start) {
    return fail(PathDefect::WrongStart, "starts at " + cell_text(path.front()));
  }
  if (path.back() != instance.end) {
    return fail(PathDefect::WrongEnd, "ends at " + cell_text(path.back()));
  }
  std::set<Cell> seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (instance.blocked(path[i])) {
      return fail(PathDefect::HitsObstacle, cell_text(path[i]) + " is blocked");
    }
    if (!seen.insert(path[i]).second) {
      return fail(PathDefect::Revisit, cell_text(path[i]) + " visited twice");
    }
    if (i > 0) {
      const int manhattan = std::abs(path[i].col - path[i - 1].col) +
                            std::abs(path[i].row - path[i - 1].row);
      if (manhattan != 1) {
        return fail(PathDefect::NonAdjacentStep,
                    cell_text(path[i - 1]) + " -> " + cell_text(path[i]));
      }
    }
  }
  return PathCheck{PathDefect::None, static_cast<int>(path.size()) - 1, ""};
}

void validate(const SppInstance& instance) {
  if (instance.grid_n < 2) {
    throw Error(ErrorCode::InvalidArgument, "grid_n must be at least 2");
  }
  if (!instance.in_grid(instance.start) || !instance.in_grid(instance.end)) {
    throw Error(ErrorCode::InvalidArgument, "endpoint off the grid");
  }
  if (instance.start == instance.end) {
    throw Error(ErrorCode::InvalidArgument, "start and end coincide");
  }
  if (!std::is_sorted(instance.obstacles.begin(), instance.obstacles.end())) {
    throw Error(ErrorCode::InvalidArgument, "obstacles must be sorted");
  }
  for (Cell c : instance.obstacles) {
    if (!instance.in_grid(c)) {
      throw Error(ErrorCode::InvalidArgument, "obstacle off the grid");
    }
  }
  if (instance.blocked(instance.start) || instance.blocked(instance.end)) {
    throw Error(ErrorCode::InvalidArgument, "endpoint covered by an obstacle");
  }
}

std::string spp_prefix(int grid_n) { return fmt::format("spp{}", grid_n); }

SppInstance gen_spp(std::uint64_t master_seed, std::uint64_t index, int grid_n,
                    const SppGenConfig& cfg) {
  if (grid_n < 2) {
    throw Error(ErrorCode::InvalidArgument, "grid_n must be at least 2");
  }
  const int cells = grid_n * grid_n;
  if (cfg.obstacle_count < 0 || cfg.obstacle_count > cells - 2) {
    throw Error(ErrorCode::InvalidArgument, "obstacle_count out of range");
  }
  const std::string prefix = spp_prefix(grid_n);
  Rng rng(derive_seed(master_seed, index, fnv1a(prefix)));

  SppInstance inst;
  inst.instance_id = scene_id(prefix, master_seed, index);
  inst.grid_n = grid_n;
  inst.seed = master_seed;
  inst.index = index;

  auto to_cell = [&](int k) { return Cell{k % grid_n, k / grid_n}; };
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    const int s = rng.uniform_int(0, cells - 1);
    int e = rng.uniform_int(0, cells - 2);
    if (e >= s) ++e;
    inst.start = to_cell(s);
    inst.end = to_cell(e);
    inst.obstacles.clear();
    if (cfg.obstacle_count > 0) {
      std::vector<int> free;
      for (int k = 0; k < cells; ++k) {
        if (k != s && k != e) free.push_back(k);
      }
      rng.shuffle(std::span(free));
      for (int k = 0; k < cfg.obstacle_count; ++k) {
        inst.obstacles.push_back(to_cell(free[static_cast<std::size_t>(k)]));
      }
      std::sort(inst.obstacles.begin(), inst.obstacles.end());
      try {
        solve_spp(inst);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::Unreachable) throw;
        continue;
      }
    }
    return inst;
  }
  throw Error(ErrorCode::GenerationExhausted,
              fmt::format("{}: no connected obstacle layout", inst.instance_id));
}

SppSolution solve_spp(const SppInstance& instance) {
  validate(instance);
  const int n = instance.grid_n;
  auto idx = [n](Cell c) { return static_cast<std::size_t>(c.row * n + c.col); };
  std::vector<int> dist(static_cast<std::size_t>(n * n), -1);
  std::vector<std::uint64_t> count(dist.size(), 0);

  std::deque<Cell> queue{instance.start};
  dist[idx(instance.start)] = 0;
  count[idx(instance.start)] = 1;
  while (!queue.empty()) {
    const Cell cur = queue.front();
    queue.pop_front();
    for (Cell step : kSteps) {
      const Cell next{cur.col + step.col, cur.row + step.row};
      if (!instance.in_grid(next) || instance.blocked(next)) continue;
      auto& d = dist[idx(next)];
      if (d == -1) {
        d = dist[idx(cur)] + 1;
        queue.push_back(next);
      }
      if (d == dist[idx(cur)] + 1) count[idx(next)] += count[idx(cur)];
    }
  }

  const int length = dist[idx(instance.end)];
  if (length < 0) {
    throw Error(ErrorCode::Unreachable,
                fmt::format("{}: end not reachable from start",
                            instance.instance_id));
  }

  // Walk back along the BFS layers, taking the first predecessor in
  // kSteps order.
  SppSolution sol;
  sol.optimal_length = length;
  sol.optimal_path_count = count[idx(instance.end)];
  sol.path.resize(static_cast<std::size_t>(length) + 1);
  Cell cur = instance.end;
  sol.path.back() = cur;
  for (int k = length; k > 0; --k) {
    for (Cell step : kSteps) {
      const Cell prev{cur.col + step.col, cur.row + step.row};
      if (instance.in_grid(prev) && dist[idx(prev)] == k - 1) {
        cur = prev;
        break;
      }
    }
    sol.path[static_cast<std::size_t>(k - 1)] = cur;
  }
  return sol;
}

void validate(const TspInstance& instance) {
  const auto& objs = instance.objects;
  if (objs.size() < 3) {
    throw Error(ErrorCode::InvalidArgument, "TSP needs at least 3 objects");
  }
  bool has_start = false;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    has_start |= objs[i].label == instance.start_label;
    for (std::size_t j = 0; j < i; ++j) {
      if (objs[i].label == objs[j].label || objs[i].point == objs[j].point) {
        throw Error(ErrorCode::InvalidArgument,
                    fmt::format("objects {} and {} are not distinct",
                                objs[j].label, objs[i].label));
      }
    }
  }
  if (!has_start) {
    throw Error(ErrorCode::InvalidArgument,
                "start label '" + instance.start_label + "' not present");
  }
}

double closed_tour_length(const TspInstance& instance,
                          std::span<const std::string> order) {
  auto point_of = [&](const std::string& label) {
    for (const auto& obj : instance.objects) {
      if (obj.label == label) return obj.point;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown label '" + label + "'");
  };
  if (order.empty()) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& next = order[(i + 1) % order.size()];
    total += euclidean_distance(point_of(order[i]), point_of(next));
  }
  return total;
}

std::string tsp_prefix(int n_objects) { return fmt::format("tsp{}", n_objects); }

TspInstance gen_tsp(std::uint64_t master_seed, std::uint64_t index,
                    int n_objects) {
  if (n_objects < 3 || n_objects > kMaxTspObjects) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("n_objects must lie in [3, {}]", kMaxTspObjects));
  }
  GenConfig cfg;
  cfg.min_objects = cfg.max_objects = n_objects;
  cfg.reject_ties = false;
  cfg.reject_sector_boundaries = false;
  cfg.id_prefix = tsp_prefix(n_objects);

  Scene scene = sample_scene(master_seed, index, cfg);
  Rng rng(derive_seed(master_seed, index, fnv1a(cfg.id_prefix + "/start")));

  TspInstance inst;
  inst.instance_id = scene.scene_id;
  inst.seed = master_seed;
  inst.index = index;
  inst.start_label =
      scene.objects[rng.index(scene.objects.size())].label;
  inst.objects = std::move(scene.objects);
  return inst;
}

TspSolution solve_tsp(const TspInstance& instance) {
  const int n = static_cast<int>(instance.objects.size());
  if (n > kMaxTspObjects) {
    throw Error(ErrorCode::TooLarge,
                fmt::format("{} objects exceeds the exact-solver cap of {}", n,
                            kMaxTspObjects));
  }
  validate(instance);

  // Nodes in label order so the greedy reconstruction below yields the
  // lexicographically smallest optimal sequence.
  std::vector<const SceneObject*> nodes;
  for (const auto& obj : instance.objects) nodes.push_back(&obj);
  std::sort(nodes.begin(), nodes.end(),
            [](const SceneObject* l, const SceneObject* r) {
              return l->label < r->label;
            });
  const auto start_it =
      std::find_if(nodes.begin(), nodes.end(), [&](const SceneObject* o) {
        return o->label == instance.start_label;
      });
  const SceneObject* start = *start_it;
  nodes.erase(start_it);

  const int m = n - 1;
  const std::size_t full = (std::size_t{1} << m) - 1;
  auto d = [](const SceneObject* a, const SceneObject* b) {
    return euclidean_distance(a->point, b->point);
  };

  // best[mask][j]: shortest path leaving start, visiting exactly `mask`,
  // ending at node j (j in mask).
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> best((full + 1) * static_cast<std::size_t>(m), kInf);
  auto at = [&](std::size_t mask, int j) -> double& {
    return best[mask * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)];
  };
  for (int j = 0; j < m; ++j) at(std::size_t{1} << j, j) = d(start, nodes[j]);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      const double base = at(mask, j);
      if (base == kInf) continue;
      for (int k = 0; k < m; ++k) {
        if (mask & (std::size_t{1} << k)) continue;
        double& slot = at(mask | (std::size_t{1} << k), k);
        slot = std::min(slot, base + d(nodes[j], nodes[k]));
      }
    }
  }
  double optimum = kInf;
  for (int j = 0; j < m; ++j) {
    optimum = std::min(optimum, at(full, j) + d(nodes[j], start));
  }

  // Forward greedy: pick the smallest label whose best completion (the
  // reversed best[remaining][k] path back to start) still attains the optimum.
  const double tolerance = 1e-9 * std::max(1.0, optimum);
  TspSolution sol;
  sol.order.push_back(start->label);
  std::size_t remaining = full;
  const SceneObject* cur = start;
  double prefix = 0.0;
  while (remaining != 0) {
    bool advanced = false;
    for (int k = 0; k < m && !advanced; ++k) {
      if (!(remaining & (std::size_t{1} << k))) continue;
      const double step = d(cur, nodes[k]);
      if (prefix + step + at(remaining, k) <= optimum + tolerance) {
        prefix += step;
        remaining &= ~(std::size_t{1} << k);
        cur = nodes[k];
        sol.order.push_back(cur->label);
        advanced = true;
      }
    }
    if (!advanced) {
      throw Error(ErrorCode::InvalidArgument,
                  instance.instance_id + ": tour reconstruction lost the optimum");
    }
  }
  sol.tour_length = closed_tour_length(instance, sol.order);
  return sol;
}

}  // namespace spatialkit
