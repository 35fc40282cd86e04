#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace aoc {

// One solver invocation.  Sentinels mark flags the user did not pass so the
// per-day validation can reject flags that do not apply.
struct RunConfig {
  int day = 0;   // 16, 17, 21, 23, 24
  int part = 0;  // 1 or 2
  std::string input_path;   // empty: read stdin
  std::string solver;       // empty: the day's default engine
  int layers = -1;          // day 21: directional keypad layers
  int trainings = 0;        // day 24 part 2: SAT training inputs (0 = auto)
  int pairs = -1;           // day 24 part 2: swapped pair count (default 4)
  std::uint64_t seed = 1;
  std::string dimacs_path;  // SAT days: dump the base CNF here before solving
  int bv_width = 0;         // day 17 part 2: SAT bit-width override
  std::vector<int> target;  // day 17 part 2: explicit target codes
};

struct GenConfig {
  int bits = 0;
  int pairs = 4;
  std::uint64_t seed = 1;
};

// Prints exactly one answer line to `out` (diagnostics go to `err`).
// Returns the process exit status: 0 solved, 1 infeasible/no path,
// 2 parse or usage error.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Emits a generated circuit plus a trailing `# answer:` line to `out`.
int run_gen(const GenConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace aoc
