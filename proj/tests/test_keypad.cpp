#include <array>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "aoc/days/keypad.hpp"
#include "aoc/search/dijkstra.hpp"
#include "doctest.h"
#include "support/keypad_oracle.hpp"

using namespace aoc::days;

using testsupport::bfs_system;
using testsupport::kDirPad;
using testsupport::kNumPad;
using testsupport::kPadSyms;
using testsupport::locate;
using testsupport::TestPad;
using testsupport::try_move;

namespace {

constexpr const TestPad& kNum = kNumPad;
constexpr const TestPad& kDir = kDirPad;

// runs a plan on a pad; fails the test if it walks off or over the gap
std::string simulate(const TestPad& pad, const std::string& plan) {
  int cell = locate(pad, 'A');
  std::string typed;
  for (char sym : plan) {
    if (sym == 'A') typed += pad.keys[cell];
    else REQUIRE(try_move(pad, cell, sym));
  }
  return typed;
}

// (length, turns) of a plan under the first-move-counts turn rule
std::pair<int64_t, int64_t> plan_objective(const std::string& plan) {
  int64_t turns = 0;
  char prev = 0;
  for (char sym : plan) {
    if (sym == 'A') {
      prev = 0;
    } else {
      if (sym != prev) ++turns;
      prev = sym;
    }
  }
  return {static_cast<int64_t>(plan.size()), turns};
}

// Exhaustive optimum of 1000*len + turns over ALL plans typing `text`,
// including non-shortest moves, as a scaled single-cost Dijkstra.
int64_t scaled_optimum(const TestPad& pad, const std::string& text) {
  using St = std::array<int, 3>;  // prev dir (4 = none), cell, chars typed
  std::vector<int> targets;
  for (char ch : text) targets.push_back(locate(pad, ch));
  St start{4, locate(pad, 'A'), 0};
  auto res = aoc::search::dijkstra_goal(
      std::span<const St>(&start, 1),
      [&](const St& s, auto&& emit) {
        if (s[2] == static_cast<int>(targets.size())) return;
        if (s[1] == targets[static_cast<size_t>(s[2])])
          emit(St{4, s[1], s[2] + 1}, 1000);
        for (int dir = 0; dir < 4; ++dir) {
          int cell = s[1];
          if (!try_move(pad, cell, kPadSyms[dir])) continue;
          emit(St{dir, cell, s[2]}, 1000 + (dir == s[0] ? 0 : 1));
        }
      },
      [&](const St& s) { return s[2] == static_cast<int>(targets.size()); });
  REQUIRE(res.has_value());
  return res->cost;
}

const std::vector<std::string> kSampleCodes{"029A", "980A", "179A", "456A", "379A"};
const std::vector<std::string> kDeepCodes{"671A", "826A", "670A", "085A", "283A"};

}  // namespace

TEST_CASE("numeric pad plans match the worked examples") {
  CHECK(num_pad_plan("A") == "A");
  CHECK(num_pad_plan("0A") == "<A>A");
  std::string p = num_pad_plan("029A");
  CHECK(p.size() == 12);
  CHECK(p == "<A^A^^>AvvvA");
}

TEST_CASE("directional pad plans match the worked examples") {
  CHECK(dir_pad_plan("A") == "A");
  CHECK(dir_pad_plan("^A") == "<A>A");
  CHECK(dir_pad_plan("<A") == "v<<A>>^A");
}

TEST_CASE("produced plans really type their input") {
  for (const auto& code : kSampleCodes) CHECK(simulate(kNum, num_pad_plan(code)) == code);
  for (const auto& code : kDeepCodes) CHECK(simulate(kNum, num_pad_plan(code)) == code);
  for (const char* chunk : {"A", "<A", "^A", "vA", ">A", "<vA", ">>^A", "AAA"})
    CHECK(simulate(kDir, dir_pad_plan(chunk)) == chunk);
}

TEST_CASE("plans are lexicographically optimal against unrestricted search") {
  for (const auto& code : kSampleCodes) {
    auto [len, turns] = plan_objective(num_pad_plan(code));
    CHECK(len * 1000 + turns == scaled_optimum(kNum, code));
  }
  for (const char* chunk : {"<A", "^A", ">^^A", "vvvA", "<v<A", "AA"}) {
    auto [len, turns] = plan_objective(dir_pad_plan(chunk));
    CHECK(len * 1000 + turns == scaled_optimum(kDir, chunk));
  }
}

TEST_CASE("bad codes and chunks are rejected") {
  CHECK_THROWS_AS(num_pad_plan(""), std::invalid_argument);
  CHECK_THROWS_AS(num_pad_plan("029"), std::invalid_argument);
  CHECK_THROWS_AS(num_pad_plan("0x9A"), std::invalid_argument);
  CHECK_THROWS_AS(dir_pad_plan(""), std::invalid_argument);
  CHECK_THROWS_AS(dir_pad_plan("<qA"), std::invalid_argument);
}

TEST_CASE("chunk extraction") {
  CHECK(extract_chunk("v<<A>>A") == std::pair<std::string, std::string>{"v<<A", ">>A"});
  CHECK(extract_chunk("AAv<A") == std::pair<std::string, std::string>{"AA", "v<A"});
  CHECK(extract_chunk("A") == std::pair<std::string, std::string>{"A", ""});
  CHECK(extract_chunk("<<<") == std::pair<std::string, std::string>{"<<<", ""});
}

TEST_CASE("chunk concatenation reproduces any plan") {
  std::mt19937_64 rng(31415926);
  const char alphabet[5] = {'<', '^', 'v', '>', 'A'};
  for (int round = 0; round < 500; ++round) {
    std::string plan;
    size_t len = 1 + rng() % 24;
    for (size_t i = 0; i < len; ++i) plan += alphabet[rng() % 5];
    std::string rebuilt, rest = plan;
    while (!rest.empty()) {
      auto [chunk, tail] = extract_chunk(rest);
      CHECK_FALSE(chunk.empty());
      rebuilt += chunk;
      rest = tail;
    }
    CHECK(rebuilt == plan);
  }
}

TEST_CASE("translation base cases") {
  CHECK(trans_plan_len(0, "<A") == 2);
  CHECK(trans_plan_len(1, "A") == 1);
  CHECK(trans_plan_len(3, "") == 0);
  CHECK(trans_plan_len(0, "v<<A>>^A") == 8);
}

TEST_CASE("translation agrees with the composed-system search") {
  for (const auto& code : kSampleCodes) {
    std::string plan = num_pad_plan(code);
    for (int levels = 0; levels <= 2; ++levels)
      CHECK(trans_plan_len(levels, plan) == bfs_system(code, levels));
  }
}

TEST_CASE("translation lengths grow monotonically with depth") {
  for (const auto& code : kSampleCodes) {
    std::string plan = num_pad_plan(code);
    PlanTranslator t;
    int64_t prev = static_cast<int64_t>(plan.size());
    for (int levels = 0; levels <= 6; ++levels) {
      int64_t len = t.plan_len(levels, plan);
      CHECK(len >= prev);
      prev = len;
    }
  }
}

TEST_CASE("chunks translate independently") {
  for (const auto& code : kSampleCodes) {
    std::string plan = num_pad_plan(code);
    for (int levels = 1; levels <= 3; ++levels) {
      int64_t whole = trans_plan_len(levels, plan);
      int64_t pieces = 0;
      std::string rest = plan;
      while (!rest.empty()) {
        auto [chunk, tail] = extract_chunk(rest);
        pieces += trans_plan_len(levels, chunk);
        rest = tail;
      }
      CHECK(whole == pieces);
    }
  }
}

TEST_CASE("numeric parts") {
  CHECK(numeric_part("029A") == 29);
  CHECK(numeric_part("085A") == 85);
  CHECK(numeric_part("671A") == 671);
  CHECK(numeric_part("0A") == 0);
  CHECK_THROWS_AS(numeric_part("A"), std::invalid_argument);
}

TEST_CASE("complexity sums") {
  CHECK(complexity_sum({"0A"}, 0) == 0);
  CHECK(complexity_sum(kSampleCodes, 2) == 126384);
  CHECK(complexity_sum(kDeepCodes, 25) == 226179529377982);
}
