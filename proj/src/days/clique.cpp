#include "aoc/days/clique.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "aoc/errors.hpp"
#include "aoc/sat/encode.hpp"
#include "aoc/sat/solver.hpp"

namespace aoc::days {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

LanGraph parse_lan(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> links;
  std::map<std::string, int> index;
  LanGraph g;
  // vertex indices follow first appearance so results are reproducible
  auto intern = [&](std::string name) {
    auto [it, fresh] = index.emplace(std::move(name), static_cast<int>(g.names.size()));
    if (fresh) g.names.push_back(it->first);
    return it->second;
  };
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    size_t dash = line.find('-');
    if (dash == std::string::npos) throw ParseError("expected name-name link", line_no);
    std::string a = line.substr(0, dash);
    std::string b = line.substr(dash + 1);
    if (!valid_name(a) || !valid_name(b)) throw ParseError("bad vertex name", line_no);
    if (a == b) throw ParseError("self-link", line_no);
    int ia = intern(std::move(a));  // sequenced: a is first-seen before b
    int ib = intern(std::move(b));
    links.emplace_back(ia, ib);
  }
  g.adj.assign(g.names.size(), std::vector<bool>(g.names.size(), false));
  for (const auto& [i, j] : links) {
    g.adj[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
    g.adj[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
  }
  return g;
}

int64_t count_t_triangles(const LanGraph& g) {
  const int n = g.size();
  int64_t count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!g.adj[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!g.adj[static_cast<size_t>(i)][static_cast<size_t>(k)] ||
            !g.adj[static_cast<size_t>(j)][static_cast<size_t>(k)])
          continue;
        if (g.names[static_cast<size_t>(i)][0] == 't' ||
            g.names[static_cast<size_t>(j)][0] == 't' ||
            g.names[static_cast<size_t>(k)][0] == 't')
          ++count;
      }
    }
  return count;
}

std::vector<int> max_clique_sat(const LanGraph& g,
                                const std::function<void(sat::CnfInstance&)>& on_encoded) {
  const int n = g.size();
  if (n == 0) return {};
  sat::CnfInstance cnf;
  std::vector<sat::Lit> pick;
  for (int i = 0; i < n; ++i) pick.push_back(sat::Lit::pos(cnf.new_var()));
  // a selected pair must be linked: forbid every non-edge
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adj[static_cast<size_t>(i)][static_cast<size_t>(j)])
        cnf.add_clause({~pick[static_cast<size_t>(i)], ~pick[static_cast<size_t>(j)]});
  if (on_encoded) on_encoded(cnf);
  auto best = sat::maximize_true_count(cnf, std::span<const sat::Lit>(pick.data(), pick.size()));
  std::vector<int> clique;
  if (!best) return clique;  // unreachable: the empty selection always works
  for (int i = 0; i < n; ++i)
    if (best->model.value(pick[static_cast<size_t>(i)])) clique.push_back(i);
  return clique;
}

namespace {

struct BkState {
  const LanGraph* g;
  std::vector<int> best;

  // candidates/excluded as sorted vectors keeps expansion order stable
  void expand(std::vector<int>& clique, std::vector<int> cand, std::vector<int> excl) {
    if (cand.empty() && excl.empty()) {
      if (clique.size() > best.size()) best = clique;
      return;
    }
    if (clique.size() + cand.size() <= best.size()) return;  // bound
    // pivot: vertex covering the most candidates (lowest index on ties)
    int pivot = -1;
    size_t pivot_cover = 0;
    for (const std::vector<int>* side : {&cand, &excl})
      for (int u : *side) {
        size_t cover = 0;
        for (int v : cand) cover += g->adj[static_cast<size_t>(u)][static_cast<size_t>(v)];
        if (pivot < 0 || cover > pivot_cover) {
          pivot = u;
          pivot_cover = cover;
        }
      }
    std::vector<int> branch;
    for (int v : cand)
      if (!g->adj[static_cast<size_t>(pivot)][static_cast<size_t>(v)]) branch.push_back(v);
    for (int v : branch) {
      std::vector<int> next_cand, next_excl;
      for (int u : cand)
        if (g->adj[static_cast<size_t>(v)][static_cast<size_t>(u)]) next_cand.push_back(u);
      for (int u : excl)
        if (g->adj[static_cast<size_t>(v)][static_cast<size_t>(u)]) next_excl.push_back(u);
      clique.push_back(v);
      expand(clique, std::move(next_cand), std::move(next_excl));
      clique.pop_back();
      cand.erase(std::find(cand.begin(), cand.end(), v));
      excl.insert(std::lower_bound(excl.begin(), excl.end(), v), v);
    }
  }
};

}  // namespace

std::vector<int> max_clique_bk(const LanGraph& g) {
  BkState state;
  state.g = &g;
  std::vector<int> cand(static_cast<size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) cand[static_cast<size_t>(i)] = i;
  std::vector<int> clique;
  state.expand(clique, std::move(cand), {});
  std::sort(state.best.begin(), state.best.end());
  return state.best;
}

std::string lan_password(const LanGraph& g, const std::vector<int>& clique) {
  std::vector<std::string> names;
  for (int v : clique) names.push_back(g.names.at(static_cast<size_t>(v)));
  std::sort(names.begin(), names.end());
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

}  // namespace aoc::days
