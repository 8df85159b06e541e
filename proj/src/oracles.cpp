#include "spatialkit/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>

#include <fmt/format.h>

#include "spatialkit/errors.hpp"

namespace spatialkit::oracles {

namespace {

double edge(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

struct PathSearch {
  const SppInstance& instance;
  int budget = 0;
  std::vector<Cell> path;
  std::vector<std::vector<bool>> used;
  std::vector<std::vector<Cell>> found;

  bool open(Cell c) const {
    if (c.col < 0 || c.row < 0 || c.col >= instance.grid_n || c.row >= instance.grid_n) {
      return false;
    }
    for (Cell o : instance.obstacles) {
      if (o == c) return false;
    }
    return !used[static_cast<std::size_t>(c.col)][static_cast<std::size_t>(c.row)];
  }

  void dfs(Cell cur) {
    const int steps = static_cast<int>(path.size()) - 1;
    const int remaining = std::abs(cur.col - instance.end.col) +
                          std::abs(cur.row - instance.end.row);
    if (steps + remaining > budget) return;
    if (cur == instance.end) {
      if (steps == budget) found.push_back(path);
      return;
    }
    const Cell moves[] = {{cur.col + 1, cur.row}, {cur.col - 1, cur.row},
                          {cur.col, cur.row + 1}, {cur.col, cur.row - 1}};
    for (Cell next : moves) {
      if (!open(next)) continue;
      used[static_cast<std::size_t>(next.col)][static_cast<std::size_t>(next.row)] = true;
      path.push_back(next);
      dfs(next);
      path.pop_back();
      used[static_cast<std::size_t>(next.col)][static_cast<std::size_t>(next.row)] = false;
    }
  }
};

std::string eight_way(double dx, double dy, double half_width) {
  double angle = std::atan2(dy, dx) * 180.0 / M_PI;
  if (angle < 0) angle += 360.0;
  const double nearest_axis = std::round(angle / 90.0) * 90.0;
  if (std::abs(angle - nearest_axis) < half_width) {
    switch (static_cast<int>(nearest_axis) % 360) {
      case 0: return "right";
      case 90: return "top";
      case 180: return "left";
      default: return "bottom";
    }
  }
  if (angle < 90) return "top-right";
  if (angle < 180) return "top-left";
  if (angle < 270) return "bottom-left";
  return "bottom-right";
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::PermutationBruteforce: return "permutation-bruteforce";
    case Method::PathEnumeration: return "path-enumeration";
    case Method::MonteCarlo: return "monte-carlo";
    case Method::ScalarMath: return "scalar-math";
  }
  return "?";
}

OracleResult<double> brute_tsp(const TspInstance& instance) {
  const auto& objs = instance.objects;
  if (objs.size() > static_cast<std::size_t>(kMaxBruteTspObjects)) {
    throw Error(ErrorCode::TooLarge, "brute force is limited to 9 objects");
  }
  std::size_t start = objs.size();
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (objs[i].label == instance.start_label) {
      start = i;
    } else {
      rest.push_back(i);
    }
  }
  if (start == objs.size()) throw Error(ErrorCode::InvalidArgument, "start label missing");

  double best = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    std::size_t prev = start;
    for (std::size_t i : rest) {
      total += edge(objs[prev].point, objs[i].point);
      prev = i;
    }
    total += edge(objs[prev].point, objs[start].point);
    best = std::min(best, total);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return {best, Method::PermutationBruteforce};
}

OracleResult<std::vector<std::vector<Cell>>> enumerate_shortest_paths(
    const SppInstance& instance) {
  if (instance.grid_n > kMaxEnumerationGrid) {
    throw Error(ErrorCode::TooLarge, "enumeration is limited to 6x6 grids");
  }
  if (instance.start == instance.end) {
    throw Error(ErrorCode::InvalidArgument, "start and end coincide");
  }
  PathSearch search{instance};
  search.used.assign(static_cast<std::size_t>(instance.grid_n),
                     std::vector<bool>(static_cast<std::size_t>(instance.grid_n), false));
  const int max_len = instance.grid_n * instance.grid_n - 1;
  for (int budget = 1; budget <= max_len && search.found.empty(); ++budget) {
    search.budget = budget;
    search.path = {instance.start};
    search.used[static_cast<std::size_t>(instance.start.col)]
               [static_cast<std::size_t>(instance.start.row)] = true;
    search.dfs(instance.start);
    search.used[static_cast<std::size_t>(instance.start.col)]
               [static_cast<std::size_t>(instance.start.row)] = false;
  }
  return {std::move(search.found), Method::PathEnumeration};
}

OracleResult<std::map<std::string, double>> monte_carlo_sector_freq(
    const SectorConfig& cfg, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::uniform_int_distribution<int> coord(0, kCanvasSize);
  std::map<std::string, double> freq;
  for (const char* name : {"top", "bottom", "left", "right", "top-left", "top-right",
                           "bottom-left", "bottom-right"}) {
    freq[name] = 0.0;
  }
  std::size_t drawn = 0;
  while (drawn < samples) {
    const int ax = coord(engine), ay = coord(engine);
    const int bx = coord(engine), by = coord(engine);
    if (ax == bx && ay == by) continue;
    freq[eight_way(bx - ax, by - ay, cfg.cardinal_half_width)] += 1.0;
    ++drawn;
  }
  for (auto& [name, value] : freq) value /= static_cast<double>(samples);
  return {std::move(freq), Method::MonteCarlo};
}

bool run_suite(std::ostream& out, const SuiteOptions& options) {
  bool all_ok = true;
  auto report = [&](bool ok, const std::string& line) {
    all_ok &= ok;
    out << (ok ? "[PASS] " : "[FAIL] ") << line << '\n';
  };

  for (int n = 5; n <= 8; ++n) {
    int mismatches = 0;
    for (int i = 0; i < options.tsp_instances_per_size; ++i) {
      const auto inst = gen_tsp(0x5eed0000u + static_cast<std::uint64_t>(n),
                                static_cast<std::uint64_t>(i), n);
      const double exact = solve_tsp(inst).tour_length;
      const double brute = brute_tsp(inst).value;
      if (std::abs(exact - brute) > 1e-9 * std::max(1.0, brute)) ++mismatches;
    }
    report(mismatches == 0,
           fmt::format("held-karp == brute force, n={} ({} instances, {} mismatches)", n,
                       options.tsp_instances_per_size, mismatches));
  }

  for (int grid = 4; grid <= 5; ++grid) {
    int checked = 0, bad = 0;
    for (int s = 0; s < grid * grid; ++s) {
      for (int e = 0; e < grid * grid; ++e) {
        if (s == e) continue;
        SppInstance inst;
        inst.grid_n = grid;
        inst.start = {s % grid, s / grid};
        inst.end = {e % grid, e / grid};
        const auto sol = solve_spp(inst);
        const auto paths = enumerate_shortest_paths(inst).value;
        const int manhattan = std::abs(inst.start.col - inst.end.col) +
                              std::abs(inst.start.row - inst.end.row);
        if (sol.optimal_length != manhattan || sol.optimal_path_count != paths.size() ||
            std::find(paths.begin(), paths.end(), sol.path) == paths.end()) {
          ++bad;
        }
        ++checked;
      }
    }
    report(bad == 0, fmt::format("bfs length/count == enumeration on {}x{} ({} pairs, {} bad)",
                                 grid, grid, checked, bad));
  }

  const SectorConfig defaults;
  const auto mc = monte_carlo_sector_freq(defaults, options.monte_carlo_samples).value;
  double worst = 0.0;
  for (const char* c : {"top", "bottom", "left", "right"}) {
    worst = std::max(worst, std::abs(mc.at(c) - 0.0625));
  }
  report(worst <= 0.003,
         fmt::format("cardinal sector frequency 6.25% +/- 0.3pt (worst deviation {:.3f}pt)",
                     100.0 * worst));
  return all_ok;
}

}  // namespace spatialkit::oracles
