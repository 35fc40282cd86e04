#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "aoc/sat/solver.hpp"

namespace aoc::sat {

// Fixed-width vector of literals, least significant bit first.  Helpers treat
// a width-w vector as an unsigned integer in [0, 2^w).
struct BitVec {
  std::vector<Lit> bits;

  int width() const { return static_cast<int>(bits.size()); }
  Lit operator[](int i) const { return bits[static_cast<size_t>(i)]; }
};

// Fresh unconstrained vector of `width` new variables.
BitVec bv_new(CnfInstance& cnf, int width);

// Constant vector built from the instance's shared true literal; adds no
// clauses beyond the one-time unit behind true_lit().  value must fit width.
BitVec bv_const(CnfInstance& cnf, uint64_t value, int width);

// Slicing is pure literal bookkeeping: no clauses, no fresh variables.
BitVec bv_take(const BitVec& x, int n);  // low n bits
BitVec bv_drop(const BitVec& x, int n);  // bits n..width-1 (may be empty)

// Zero-extend to `width` >= x.width() using the shared false literal.
BitVec bv_zext(CnfInstance& cnf, const BitVec& x, int width);

// Bitwise xor.  The constant form just flips literals and adds no clauses.
BitVec bv_xor(CnfInstance& cnf, const BitVec& a, const BitVec& b);
BitVec bv_xor(CnfInstance& cnf, const BitVec& a, uint64_t b);

// Logical right shift by a variable amount (barrel shifter).  sh.width() <= 6;
// shift amounts >= x.width() yield zero.
BitVec bv_shr_var(CnfInstance& cnf, const BitVec& x, const BitVec& sh);

// Equality reified into a single literal.
Lit bv_eq(CnfInstance& cnf, const BitVec& a, const BitVec& b);
Lit bv_eq_const(CnfInstance& cnf, const BitVec& x, uint64_t value);

// Ripple-carry sum; result has width max(|a|,|b|) equalized + 1, so it is
// exact (the top bit is the final carry).  Widths must match.
BitVec bv_add(CnfInstance& cnf, const BitVec& a, const BitVec& b);

// Read a vector's numeric value out of a model.  width <= 64.
uint64_t bv_value(const Model& m, const BitVec& x);

struct BvMinimum {
  uint64_t value = 0;
  Model model;
  // Per-bit decisions in the order taken (most significant first):
  // (bit index, value the bit was pinned to).
  std::vector<std::pair<int, bool>> forced;
};

// Numeric minimum of x over all models consistent with `assumptions`, found
// by fixing bits most-significant-first with assumption solves.  The instance
// itself is not mutated.  Returns nullopt when no model exists at all.
std::optional<BvMinimum> bv_minimize(CnfInstance& cnf, const BitVec& x,
                                     std::span<const Lit> assumptions = {});

}  // namespace aoc::sat
