#pragma once

#include <functional>
#include <string>
#include <vector>

#include "aoc/sat/solver.hpp"

namespace aoc::days {

// Undirected graph of computer links.  Vertices are indexed in order of
// first appearance, so repeated runs over the same input line up exactly.
struct LanGraph {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> adj;

  int size() const { return static_cast<int>(names.size()); }
};

// Parses "name-name" lines.  Blank lines are skipped; duplicate links are
// idempotent.  Malformed lines and self-links raise aoc::ParseError with the
// offending line number.
LanGraph parse_lan(const std::string& text);

// Number of 3-cliques containing at least one vertex whose name starts 't'.
int64_t count_t_triangles(const LanGraph& g);

// Maximum clique, as sorted vertex indices.  The SAT form encodes non-edges
// as exclusion clauses and maximizes the selected count; `on_encoded` (if
// set) sees the base instance before any solving.
std::vector<int> max_clique_sat(const LanGraph& g,
                                const std::function<void(sat::CnfInstance&)>& on_encoded = {});
std::vector<int> max_clique_bk(const LanGraph& g);  // branch-and-bound reference

// Comma-joined sorted names of a vertex set (the puzzle's password format).
std::string lan_password(const LanGraph& g, const std::vector<int>& clique);

}  // namespace aoc::days
