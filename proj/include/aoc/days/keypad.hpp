#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace aoc::days {

// Plans are strings over '<', '^', 'v', '>', 'A' ('A' = press the current key).

// Cheapest plan typing `code` ("[0-9]*A") on the numeric pad, starting on 'A'.
// Cheapest = lexicographically minimal (length, direction changes), ties
// broken by trying moves in the fixed order <, ^, v, >.
std::string num_pad_plan(const std::string& code);

// Same, typing `chunk` on the directional pad.
std::string dir_pad_plan(const std::string& chunk);

// Splits off the leading chunk: the maximal run of non-'A' symbols plus the
// 'A' run that follows (just the 'A' run when the plan starts with 'A').
// Invariant: chunk + rest == plan.
std::pair<std::string, std::string> extract_chunk(const std::string& plan);

// Length of a plan after threading it through `levels` directional-control
// layers.  Chunks translate independently because each one ends with 'A',
// which parks the controlling arm back on its 'A' key.
class PlanTranslator {
 public:
  int64_t plan_len(int levels, const std::string& plan);

 private:
  std::map<std::pair<int, std::string>, int64_t> chunk_len_;
  std::map<std::string, std::string> dir_plan_;
};

// One-shot convenience over a fresh translator.
int64_t trans_plan_len(int levels, const std::string& plan);

// Integer value of the code's digit characters ("085A" -> 85).
int64_t numeric_part(const std::string& code);

// Sum over codes of numeric_part(code) * |plan through `levels` layers|.
int64_t complexity_sum(const std::vector<std::string>& codes, int levels);

}  // namespace aoc::days
