#include "aoc/days/maze.hpp"

#include <sstream>

#include "aoc/errors.hpp"

namespace aoc::days {

namespace {

int opposite(int d) { return d ^ 1; }  // N<->S, W<->E

// the two quarter-turn neighbours of a facing: N/S turn to W/E and vice versa
std::pair<int, int> turns(int d) { return d < 2 ? std::pair{kWest, kEast} : std::pair{kNorth, kSouth}; }

// forward edges: step into the faced tile for 1, or turn for 1000
auto forward_edges(const Maze& m) {
  return [&m](const Pose& p, auto&& emit) {
    int nr = p.r + kDr[p.d], nc = p.c + kDc[p.d];
    if (!m.wall(nr, nc)) emit(Pose{nr, nc, p.d}, 1);
    auto [t1, t2] = turns(p.d);
    emit(Pose{p.r, p.c, t1}, 1000);
    emit(Pose{p.r, p.c, t2}, 1000);
  };
}

// reversed move edges: arrive-from tile, same facing; turns are symmetric
auto backward_edges(const Maze& m) {
  return [&m](const Pose& p, auto&& emit) {
    int nr = p.r - kDr[p.d], nc = p.c - kDc[p.d];
    if (!m.wall(nr, nc)) emit(Pose{nr, nc, p.d}, 1);
    auto [t1, t2] = turns(p.d);
    emit(Pose{p.r, p.c, t1}, 1000);
    emit(Pose{p.r, p.c, t2}, 1000);
  };
}

}  // namespace

Maze parse_maze(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Maze m;
  int starts = 0, ends = 0;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!m.cells.empty() && line.size() != m.cells.front().size())
      throw ParseError("ragged row", line_no);
    for (size_t i = 0; i < line.size(); ++i) {
      char ch = line[i];
      if (ch != '#' && ch != '.' && ch != 'S' && ch != 'E')
        throw ParseError(std::string("bad cell '") + ch + "'", line_no);
      if (ch == 'S') {
        ++starts;
        m.start_r = static_cast<int>(m.cells.size());
        m.start_c = static_cast<int>(i);
      } else if (ch == 'E') {
        ++ends;
        m.end_r = static_cast<int>(m.cells.size());
        m.end_c = static_cast<int>(i);
      }
    }
    m.cells.push_back(line);
  }
  if (starts != 1) throw ParseError(starts ? "duplicate start tile" : "missing start tile");
  if (ends != 1) throw ParseError(ends ? "duplicate end tile" : "missing end tile");
  m.rows = static_cast<int>(m.cells.size());
  m.cols = static_cast<int>(m.cells.front().size());
  if (m.rows < 3 || m.cols < 3) throw ParseError("grid too small");
  for (int r = 0; r < m.rows; ++r)
    if (!m.wall(r, 0) || !m.wall(r, m.cols - 1)) throw ParseError("border must be wall");
  for (int c = 0; c < m.cols; ++c)
    if (!m.wall(0, c) || !m.wall(m.rows - 1, c)) throw ParseError("border must be wall");
  return m;
}

std::optional<int64_t> maze_min_cost(const Maze& m) {
  Pose start{m.start_r, m.start_c, kEast};
  auto res = search::dijkstra_goal(std::span<const Pose>(&start, 1), forward_edges(m),
                                   [&](const Pose& p) { return p.r == m.end_r && p.c == m.end_c; });
  if (!res) return std::nullopt;
  return res->cost;
}

search::CostTable<Pose> forward_costs(const Maze& m) {
  Pose start{m.start_r, m.start_c, kEast};
  return search::dijkstra_all(std::span<const Pose>(&start, 1), forward_edges(m));
}

search::CostTable<Pose> backward_costs(const Maze& m) {
  std::vector<Pose> seeds;
  for (int d = 0; d < 4; ++d) seeds.push_back(Pose{m.end_r, m.end_c, d});
  return search::dijkstra_all(std::span<const Pose>(seeds.data(), seeds.size()),
                              backward_edges(m));
}

std::optional<int64_t> optimal_tiles(const Maze& m) {
  auto best = maze_min_cost(m);
  if (!best) return std::nullopt;
  auto to_tile = forward_costs(m);
  auto to_end = backward_costs(m);
  int64_t count = 0;
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      if (m.wall(r, c)) continue;
      bool on_route = false;
      for (int d = 0; d < 4 && !on_route; ++d) {
        auto cs = to_tile.cost(Pose{r, c, d});
        auto ce = to_end.cost(Pose{r, c, d});
        on_route = cs && ce && *cs + *ce == *best;
      }
      count += on_route;
    }
  return count;
}

std::optional<int64_t> via_point_oracle(const Maze& m) {
  auto best = maze_min_cost(m);
  if (!best) return std::nullopt;
  int64_t count = 2;  // the endpoints themselves
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      if (m.wall(r, c)) continue;
      if ((r == m.start_r && c == m.start_c) || (r == m.end_r && c == m.end_c)) continue;
      std::optional<int64_t> via;
      for (int d = 0; d < 4; ++d) {
        // walking the first leg in reverse is a normal walk that must reach
        // the start tile facing west (the flipped initial east facing)
        Pose back{r, c, d};
        auto leg1 = search::dijkstra_goal(
            std::span<const Pose>(&back, 1), forward_edges(m), [&](const Pose& p) {
              return p.r == m.start_r && p.c == m.start_c && p.d == kWest;
            });
        if (!leg1) continue;
        Pose fwd{r, c, opposite(d)};
        auto leg2 = search::dijkstra_goal(
            std::span<const Pose>(&fwd, 1), forward_edges(m),
            [&](const Pose& p) { return p.r == m.end_r && p.c == m.end_c; });
        if (!leg2) continue;
        int64_t total = leg1->cost + leg2->cost;
        if (!via || total < *via) via = total;
      }
      if (via && *via == *best) ++count;
    }
  return count;
}

}  // namespace aoc::days
