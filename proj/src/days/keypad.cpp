#include "aoc/days/keypad.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>

#include "aoc/search/memo_min.hpp"

namespace aoc::days {

namespace {

// Move symbols in preference order; index doubles as the direction id.
constexpr char kDirSym[4] = {'<', '^', 'v', '>'};
constexpr int kMoveDr[4] = {0, -1, 1, 0};
constexpr int kMoveDc[4] = {-1, 0, 0, 1};
constexpr int kDummyDir = 4;  // "no previous move": the first move is a turn

struct Pad {
  int rows, cols;
  int gap_r, gap_c;
  const char* keys;  // row-major, gap position holds a space

  std::pair<int, int> locate(char key) const {
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (keys[r * cols + c] == key) return {r, c};
    throw std::invalid_argument(std::string("symbol not on the pad: '") + key + "'");
  }
};

constexpr Pad kNumPad{4, 3, 3, 0, "789456123 0A"};
constexpr Pad kDirPad{2, 3, 0, 0, " ^A<v>"};

// search state: previous move direction, arm cell, symbols already typed
using Key = std::array<int, 3>;

std::string best_plan(const Pad& pad, const std::string& text) {
  std::vector<std::pair<int, int>> targets;
  for (char ch : text) targets.push_back(pad.locate(ch));
  auto [start_r, start_c] = pad.locate('A');

  auto derive = [&](const Key& k) {
    auto [prev, cell, idx] = k;
    std::vector<search::Derivation<Key>> options;
    if (idx == static_cast<int>(targets.size())) {
      options.push_back({{0, 0}, {}});
      return options;
    }
    int r = cell / pad.cols, c = cell % pad.cols;
    auto [tr, tc] = targets[static_cast<size_t>(idx)];
    if (r == tr && c == tc) {
      // on the key: press, and the next chunk starts turn accounting afresh
      options.push_back({{1, 0}, {Key{kDummyDir, cell, idx + 1}}});
      return options;
    }
    // Only moves that close in on the target key: length-minimal plans never
    // step away, and restricting to them keeps the recursion well-founded.
    int dist = std::abs(r - tr) + std::abs(c - tc);
    for (int dir = 0; dir < 4; ++dir) {
      int nr = r + kMoveDr[dir], nc = c + kMoveDc[dir];
      if (std::abs(nr - tr) + std::abs(nc - tc) >= dist) continue;
      if (nr == pad.gap_r && nc == pad.gap_c) continue;
      options.push_back(
          {{1, dir == prev ? 0 : 1}, {Key{dir, nr * pad.cols + nc, idx}}});
    }
    return options;
  };

  search::MemoMin<Key> memo(derive);
  Key key{kDummyDir, start_r * pad.cols + start_c, 0};
  memo.eval(key);

  std::string plan;
  for (;;) {
    auto options = derive(key);
    const auto& chosen = options[static_cast<size_t>(memo.eval(key).chosen_index)];
    if (chosen.subkeys.empty()) break;
    const Key& next = chosen.subkeys[0];
    plan += next[2] > key[2] ? 'A' : kDirSym[next[0]];
    key = next;
  }
  return plan;
}

void require_code(const std::string& code) {
  if (code.empty() || code.back() != 'A')
    throw std::invalid_argument("code must end with 'A'");
  for (size_t i = 0; i + 1 < code.size(); ++i)
    if (code[i] < '0' || code[i] > '9')
      throw std::invalid_argument("code must be digits followed by 'A'");
}

}  // namespace

std::string num_pad_plan(const std::string& code) {
  require_code(code);
  return best_plan(kNumPad, code);
}

std::string dir_pad_plan(const std::string& chunk) {
  if (chunk.empty()) throw std::invalid_argument("empty chunk");
  return best_plan(kDirPad, chunk);
}

std::pair<std::string, std::string> extract_chunk(const std::string& plan) {
  if (plan.empty()) throw std::invalid_argument("empty plan");
  size_t i = 0;
  while (i < plan.size() && plan[i] != 'A') ++i;
  while (i < plan.size() && plan[i] == 'A') ++i;
  return {plan.substr(0, i), plan.substr(i)};
}

int64_t PlanTranslator::plan_len(int levels, const std::string& plan) {
  if (levels < 0) throw std::invalid_argument("negative layer count");
  if (plan.empty()) return 0;
  if (levels == 0) return static_cast<int64_t>(plan.size());
  auto [chunk, rest] = extract_chunk(plan);
  auto memo_key = std::make_pair(levels, chunk);
  auto it = chunk_len_.find(memo_key);
  if (it == chunk_len_.end()) {
    auto plan_it = dir_plan_.find(chunk);
    if (plan_it == dir_plan_.end())
      plan_it = dir_plan_.emplace(chunk, dir_pad_plan(chunk)).first;
    it = chunk_len_.emplace(memo_key, plan_len(levels - 1, plan_it->second)).first;
  }
  return it->second + plan_len(levels, rest);
}

int64_t trans_plan_len(int levels, const std::string& plan) {
  PlanTranslator t;
  return t.plan_len(levels, plan);
}

int64_t numeric_part(const std::string& code) {
  int64_t value = 0;
  bool any = false;
  for (char ch : code)
    if (ch >= '0' && ch <= '9') {
      value = value * 10 + (ch - '0');
      any = true;
    }
  if (!any) throw std::invalid_argument("code has no digits");
  return value;
}

int64_t complexity_sum(const std::vector<std::string>& codes, int levels) {
  PlanTranslator shared;
  int64_t sum = 0;
  for (const std::string& code : codes)
    sum += numeric_part(code) * shared.plan_len(levels, num_pad_plan(code));
  return sum;
}

}  // namespace aoc::days
