#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aoc/errors.hpp"
#include "aoc/sat/solver.hpp"

namespace aoc::days {

enum class GateOp { And, Or, Xor };

struct Gate {
  GateOp op;
  std::string in1, in2, out;
};

// Boolean circuit over named wires.  Wires x00..x{W-1} and y00..y{W-1} carry
// the two input numbers (LSB first); wires z00..z{out_width-1} carry the
// output.  Every wire is driven by at most one gate, and x/y wires by none.
struct Circuit {
  std::map<std::string, bool> inputs;  // initial values for undriven wires
  std::vector<Gate> gates;
  int in_width = 0;   // number of x wires (y matches on well-formed inputs)
  int out_width = 0;  // number of gate-driven z wires
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format: `wire: bit` lines, a blank line, then `a OP b -> c` lines with
// OP in {AND, OR, XOR}.  Lines starting with '#' are ignored.  Rejects wires
// driven twice (or both listed as input and gate-driven), unknown ops, and
// combinational cycles; errors name the offending wire.
Circuit parse_circuit(const std::string& text);

// Overwrites the x/y input bits with the given values (LSB first).
void set_inputs(Circuit& c, std::uint64_t x, std::uint64_t y);

// Topological evaluation; returns sum(2^i * z_i).  Throws EvalError on an
// undriven non-input wire or a combinational cycle.
std::uint64_t eval_circuit(const Circuit& c);

struct GenResult {
  std::string text;                  // parseable circuit (no answer line)
  std::vector<std::string> swapped;  // sorted output wires involved in swaps
};

// Emits a W-bit ripple-carry adder with random internal wire names and random
// input values, then exchanges the outputs of `pairs` disjoint gate pairs.
// Rejects swaps that are unobservable or create a cycle, and re-draws until
// the instance is genuinely faulty (bounded retries).  Deterministic per seed.
GenResult gen_instance(int bits, int pairs, std::uint64_t seed);

struct SwapSearchOptions {
  int trainings = 0;  // 0 = derive from the circuit's width and `pairs`
  std::uint64_t seed = 1;
  int max_rounds = 6;  // verify-and-retry rounds before giving up
  // called once the initial training encoding is complete, before any solving
  std::function<void(sat::CnfInstance&)> on_encoded;
};

// SAT repair: finds `pairs` disjoint gate-output swaps after which the
// circuit computes z = x + y on random training inputs, verifies the repair
// against fresh probes (exhaustively for in_width <= 8), and re-solves with
// doubled trainings when verification fails.  Returns the sorted wire names
// involved, an empty list for pairs == 0 on a correct adder, or nullopt when
// no consistent swap set exists.
std::optional<std::vector<std::string>> find_swaps_sat(const Circuit& c, int pairs,
                                                       const SwapSearchOptions& opts = {});

// Structural ripple-carry screen: flags gate outputs that break the expected
// adder shape (sum outputs not XOR-driven, half-adder gates feeding the wrong
// consumers, OR gates fed by non-ANDs) or whose input cone covers the wrong
// x/y bits.  Over-approximates: a flagged wire is only suspicious, but on
// swapped-adder instances every swapped wire is flagged and a correct adder
// yields an empty list.
std::vector<std::string> ripple_structural_check(const Circuit& c);

// Number of ways to choose `pairs` disjoint unordered gate pairs from n
// gates: n! / (2^k * k! * (n-2k)!).  Exact; throws when n < 2k.
boost::multiprecision::cpp_int swap_space_size(int gates, int pairs);

}  // namespace aoc::days
