#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

namespace aoc::search {

// Shortest-path distances from a set of sources.  `pred` holds one witness
// predecessor per reached non-source state (the first one that set the final
// distance), so callers can walk a shortest path backwards.
template <typename State>
struct CostTable {
  std::map<State, int64_t> dist;
  std::map<State, State> pred;

  std::optional<int64_t> cost(const State& s) const {
    auto it = dist.find(s);
    if (it == dist.end()) return std::nullopt;
    return it->second;
  }
};

template <typename State>
struct PathResult {
  int64_t cost = 0;
  std::vector<State> path;  // source .. goal, inclusive
};

namespace detail {

template <typename State>
struct QueueEntry {
  int64_t cost;
  uint64_t seq;  // insertion order: deterministic FIFO tie-break
  State state;

  bool operator>(const QueueEntry& o) const {
    if (cost != o.cost) return cost > o.cost;
    return seq > o.seq;
  }
};

template <typename State>
using MinQueue =
    std::priority_queue<QueueEntry<State>, std::vector<QueueEntry<State>>,
                        std::greater<QueueEntry<State>>>;

// Core loop shared by both entry points.  Stops after settling the first
// state for which `stop` returns true; `stop` that always returns false
// exhausts the reachable region.
template <typename State, typename Neighbors, typename Stop>
std::optional<State> run(std::span<const State> sources, Neighbors&& neighbors,
                         Stop&& stop, CostTable<State>& table) {
  MinQueue<State> queue;
  uint64_t seq = 0;
  for (const State& s : sources) {
    auto [it, fresh] = table.dist.emplace(s, 0);
    if (fresh) queue.push({0, seq++, s});
  }
  while (!queue.empty()) {
    QueueEntry<State> top = queue.top();
    queue.pop();
    auto it = table.dist.find(top.state);
    if (it->second != top.cost) continue;  // stale entry, already improved
    if (stop(top.state)) return top.state;
    neighbors(top.state, [&](const State& next, int64_t weight) {
      if (weight < 0) throw std::invalid_argument("dijkstra: negative edge weight");
      int64_t cand = top.cost + weight;
      auto [dit, fresh] = table.dist.emplace(next, cand);
      if (!fresh && dit->second <= cand) return;
      dit->second = cand;
      table.pred.insert_or_assign(next, top.state);
      queue.push({cand, seq++, next});
    });
  }
  return std::nullopt;
}

}  // namespace detail

// Distances from `sources` to every reachable state.  `neighbors` is called as
// neighbors(state, emit) and reports edges via emit(next_state, weight).
template <typename State, typename Neighbors>
CostTable<State> dijkstra_all(std::span<const State> sources, Neighbors&& neighbors) {
  CostTable<State> table;
  detail::run(sources, neighbors, [](const State&) { return false; }, table);
  return table;
}

// First goal state settled, with one witness shortest path.  Ties between
// equal-cost goals resolve to the earliest-enqueued state.
template <typename State, typename Neighbors, typename GoalPred>
std::optional<PathResult<State>> dijkstra_goal(std::span<const State> sources,
                                               Neighbors&& neighbors, GoalPred&& goal) {
  CostTable<State> table;
  auto hit = detail::run(sources, neighbors, goal, table);
  if (!hit) return std::nullopt;
  PathResult<State> result;
  result.cost = table.dist.at(*hit);
  State cur = *hit;
  result.path.push_back(cur);
  for (auto it = table.pred.find(cur); it != table.pred.end(); it = table.pred.find(cur)) {
    cur = it->second;
    result.path.push_back(cur);
  }
  std::reverse(result.path.begin(), result.path.end());
  return result;
}

}  // namespace aoc::search
