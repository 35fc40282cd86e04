#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aoc/search/dijkstra.hpp"

namespace aoc::days {

// Rectangular grid with a walled border, one start and one end tile.
struct Maze {
  std::vector<std::string> cells;
  int rows = 0, cols = 0;
  int start_r = 0, start_c = 0;
  int end_r = 0, end_c = 0;

  bool wall(int r, int c) const {
    return cells[static_cast<size_t>(r)][static_cast<size_t>(c)] == '#';
  }
};

// Direction indices into the shared delta table {N, S, W, E}.
inline constexpr int kDr[4] = {-1, 1, 0, 0};
inline constexpr int kDc[4] = {0, 0, -1, 1};
inline constexpr int kNorth = 0, kSouth = 1, kWest = 2, kEast = 3;

struct Pose {
  int r = 0, c = 0, d = 0;
  friend auto operator<=>(const Pose&, const Pose&) = default;
};

Maze parse_maze(const std::string& text);

// Cheapest run from the start tile facing east to the end tile (any facing):
// moves cost 1, quarter turns cost 1000.  nullopt when the end is unreachable.
std::optional<int64_t> maze_min_cost(const Maze& m);

// Cost tables the tile count is derived from: forward distances from the
// start pose, and distances-to-end read off a reverse traversal seeded with
// the end tile in all four facings.
search::CostTable<Pose> forward_costs(const Maze& m);
search::CostTable<Pose> backward_costs(const Maze& m);

// Number of tiles lying on at least one cheapest run (start and end count).
std::optional<int64_t> optimal_tiles(const Maze& m);

// Same count through per-tile via-point searches; quadratic, for small grids.
std::optional<int64_t> via_point_oracle(const Maze& m);

}  // namespace aoc::days
