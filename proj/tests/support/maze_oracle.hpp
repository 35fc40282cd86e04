#pragma once

// Maze oracles independent of the production tiling code: an exhaustive
// cheapest-route enumerator and a random instance generator.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aoc/days/maze.hpp"

namespace testsupport {

// Exhaustive enumeration of every cheapest route, collecting visited tiles.
// Sound because each action costs >= 1: a cheapest route never repeats a pose,
// so pruning pose revisits on the current path loses nothing.
struct RouteEnum {
  const aoc::days::Maze& m;
  int64_t budget;
  std::set<aoc::days::Pose> on_path;
  std::vector<std::pair<int, int>> tiles;
  std::set<std::pair<int, int>> optimal_tiles;

  void walk(aoc::days::Pose p, int64_t cost) {
    if (cost > budget) return;
    if (p.r == m.end_r && p.c == m.end_c) {
      if (cost == budget)
        for (auto t : tiles) optimal_tiles.insert(t);
      return;
    }
    if (!on_path.insert(p).second) return;
    int nr = p.r + aoc::days::kDr[p.d], nc = p.c + aoc::days::kDc[p.d];
    if (!m.wall(nr, nc)) {
      tiles.push_back({nr, nc});
      walk(aoc::days::Pose{nr, nc, p.d}, cost + 1);
      tiles.pop_back();
    }
    for (int d = 0; d < 4; ++d)
      if (d != p.d && (d < 2) != (p.d < 2))
        walk(aoc::days::Pose{p.r, p.c, d}, cost + 1000);
    on_path.erase(p);
  }
};

inline std::optional<int64_t> enumerated_tiles(const aoc::days::Maze& m) {
  auto best = aoc::days::maze_min_cost(m);
  if (!best) return std::nullopt;
  RouteEnum e{m, *best, {}, {}, {}};
  e.tiles.push_back({m.start_r, m.start_c});
  e.walk(aoc::days::Pose{m.start_r, m.start_c, aoc::days::kEast}, 0);
  return static_cast<int64_t>(e.optimal_tiles.size());
}

inline aoc::days::Maze random_maze(std::mt19937_64& rng, int max_dim) {
  for (;;) {
    int rows = 5 + static_cast<int>(rng() % static_cast<uint64_t>(max_dim - 4));
    int cols = 5 + static_cast<int>(rng() % static_cast<uint64_t>(max_dim - 4));
    std::vector<std::string> cells(static_cast<size_t>(rows),
                                   std::string(static_cast<size_t>(cols), '#'));
    std::vector<std::pair<int, int>> open;
    for (int r = 1; r < rows - 1; ++r)
      for (int c = 1; c < cols - 1; ++c)
        if (rng() % 100 >= 30) {
          cells[static_cast<size_t>(r)][static_cast<size_t>(c)] = '.';
          open.push_back({r, c});
        }
    if (open.size() < 2) continue;
    size_t si = rng() % open.size();
    size_t ei = rng() % open.size();
    if (si == ei) continue;
    cells[static_cast<size_t>(open[si].first)][static_cast<size_t>(open[si].second)] = 'S';
    cells[static_cast<size_t>(open[ei].first)][static_cast<size_t>(open[ei].second)] = 'E';
    std::string text;
    for (const auto& row : cells) {
      text += row;
      text += '\n';
    }
    return aoc::days::parse_maze(text);
  }
}

}  // namespace testsupport
