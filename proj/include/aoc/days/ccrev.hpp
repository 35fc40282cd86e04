#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aoc/sat/solver.hpp"

namespace aoc::days {

// Three-register machine over 3-bit instruction codes.
struct Device {
  uint64_t a = 0, b = 0, c = 0;
  std::vector<int> program;
};

// Raised by run() on illegal executions: reserved combo operand, odd jump
// target, or exceeding the step budget (treated as non-termination).
class ExecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a program is not the single-loop shape the reversers support.
class ShapeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "Register A: n" / "Register B: n" / "Register C: n" / blank / "Program: c,c,...".
Device parse_device(const std::string& text);

// Executes the program to halt and returns the emitted codes.
std::vector<int> run(const std::vector<int>& program, uint64_t a, uint64_t b = 0,
                     uint64_t c = 0, int64_t max_steps = 1'000'000);

// Validates the loop shape both reversers rely on: a single trailing `jnz 0`,
// exactly one output and one `A >>= 3` per pass, and no read of B or C before
// the pass writes it.  Throws ShapeError otherwise.
void check_loop_shape(const std::vector<int>& program);

// Smallest initial A (B = C = 0) that makes the program emit `target`,
// or nullopt when no value does.  Digit-by-digit search from the most
// significant end; every answer is re-run before being returned.
std::optional<uint64_t> reverse_min_a_dfs(const std::vector<int>& program,
                                          std::span<const int> target);
std::optional<uint64_t> reverse_min_a_dfs(const std::vector<int>& program);

struct SatReverseOptions {
  int width = 0;  // bits in the unknown A; 0 means 3 * |target|
  // called once the base encoding is complete, before any solving (e.g. to
  // dump the instance)
  std::function<void(sat::CnfInstance&)> on_encoded;
};

// Same contract as the DFS form, via one symbolic unrolling of the loop body
// per target code and a minimizing sequence of solves.
std::optional<uint64_t> reverse_min_a_sat(const std::vector<int>& program,
                                          std::span<const int> target,
                                          const SatReverseOptions& opts = {});
std::optional<uint64_t> reverse_min_a_sat(const std::vector<int>& program,
                                          const SatReverseOptions& opts = {});

}  // namespace aoc::days
