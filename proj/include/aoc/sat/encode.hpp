#pragma once

#include <optional>
#include <span>
#include <vector>

#include "aoc/sat/solver.hpp"

namespace aoc::sat {

// Tseitin gates: each returns a fresh literal constrained to equal the
// function of its inputs in every model.
Lit gate_and(CnfInstance& cnf, Lit a, Lit b);
Lit gate_or(CnfInstance& cnf, Lit a, Lit b);
Lit gate_xor(CnfInstance& cnf, Lit a, Lit b);
Lit gate_eq(CnfInstance& cnf, Lit a, Lit b);
inline Lit gate_not(Lit a) { return ~a; }

// Sequential-counter cardinality constraints over the given literals.
// Requires 0 <= k <= lits.size().
void at_most_k(CnfInstance& cnf, std::span<const Lit> lits, int k);
void at_least_k(CnfInstance& cnf, std::span<const Lit> lits, int k);

// Bidirectional unary counter: in every model, output j (1-based) is true
// exactly when at least j of the inputs are true. Lets a caller tighten a
// cardinality bound incrementally with single unit clauses.
class UnaryCounter {
 public:
  UnaryCounter(CnfInstance& cnf, std::span<const Lit> inputs);

  int size() const { return static_cast<int>(geq_.size()); }
  // Literal meaning "at least k inputs are true", 1 <= k <= size().
  Lit count_geq(int k) const { return geq_[static_cast<size_t>(k - 1)]; }

 private:
  std::vector<Lit> geq_;
};

// One-hot finite-domain variable: exactly one selector true per model.
class FdVar {
 public:
  FdVar() = default;
  explicit FdVar(std::vector<Lit> selectors) : selectors_(std::move(selectors)) {}

  int domain_size() const { return static_cast<int>(selectors_.size()); }
  Lit is(int value) const { return selectors_[static_cast<size_t>(value)]; }
  std::span<const Lit> selectors() const { return selectors_; }

  // The single selected value under a model.
  int decode(const Model& m) const;

 private:
  std::vector<Lit> selectors_;
};

// Allocates an FdVar over domain {0..n-1} with at-least-one plus pairwise
// at-most-one clauses.
FdVar fd_var(CnfInstance& cnf, int n);

// Pairwise value exclusion between all variables. Domains must agree. More
// variables than domain values is allowed and simply yields an
// unsatisfiable encoding.
void all_different(CnfInstance& cnf, std::span<const FdVar> vars);

struct MaxCountResult {
  int k_max = 0;
  Model model;
};

// Iterative strengthening: solve, then repeatedly require one more true
// literal until unsatisfiable. Returns the last model and its count, or
// nullopt when the instance is unsatisfiable outright. The instance keeps
// the added bound clauses.
std::optional<MaxCountResult> maximize_true_count(CnfInstance& cnf, std::span<const Lit> lits);

}  // namespace aoc::sat
