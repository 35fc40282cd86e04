#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace aoc::sat {

// A signed reference to a boolean variable. Variables are 1-based ints; a
// literal packs the variable with its polarity as 2*var+neg so literals can
// index dense arrays (watch lists, seen flags) directly.
class Lit {
 public:
  Lit() = default;  // undefined literal
  Lit(int var, bool negated) : code_(2 * var + (negated ? 1 : 0)) {}

  static Lit pos(int var) { return Lit(var, false); }
  static Lit neg(int var) { return Lit(var, true); }
  static Lit from_index(int code) {
    Lit l;
    l.code_ = code;
    return l;
  }

  int var() const { return code_ >> 1; }
  bool negated() const { return (code_ & 1) != 0; }
  int index() const { return code_; }
  bool defined() const { return code_ >= 2; }

  Lit operator~() const { return from_index(code_ ^ 1); }

  // Signed DIMACS form: +var for positive, -var for negated.
  int to_dimacs() const { return negated() ? -var() : var(); }
  static Lit from_dimacs(int v) { return v < 0 ? neg(-v) : pos(v); }

  friend auto operator<=>(const Lit&, const Lit&) = default;

 private:
  int code_ = 0;
};

// Total assignment produced by a successful solve. Indexed by variable.
class Model {
 public:
  Model() = default;
  explicit Model(std::vector<uint8_t> values) : values_(std::move(values)) {}

  int num_vars() const { return static_cast<int>(values_.size()) - 1; }
  bool value(int var) const { return values_[static_cast<size_t>(var)] != 0; }
  bool value(Lit l) const { return value(l.var()) != l.negated(); }

  bool satisfies(std::span<const Lit> clause) const {
    for (Lit l : clause)
      if (value(l)) return true;
    return false;
  }

 private:
  std::vector<uint8_t> values_;  // slot 0 unused
};

// Incremental CDCL solver over CNF. Deterministic: no randomization anywhere;
// branching ties break toward the lowest variable index.
class CnfInstance {
 public:
  CnfInstance();
  CnfInstance(CnfInstance&&) noexcept = default;
  CnfInstance& operator=(CnfInstance&&) noexcept = default;
  CnfInstance(const CnfInstance&) = default;
  CnfInstance& operator=(const CnfInstance&) = default;

  // Allocates the next variable index. Variable count only grows.
  int new_var();
  int num_vars() const { return num_vars_; }

  // Stores a clause. Duplicate literals collapse, clauses containing both x
  // and ~x are dropped, the empty clause marks the instance unsatisfiable.
  // Referencing an unallocated variable throws std::invalid_argument.
  void add_clause(std::span<const Lit> lits);
  void add_clause(std::initializer_list<Lit> lits);

  // A literal constrained true, allocated on first use. Handy for encoding
  // constants.
  Lit true_lit();

  // Decides satisfiability under the current clause set plus the given
  // assumption literals. Returns a total model on success. The instance
  // stays usable afterwards: more clauses may be added and solve re-run.
  std::optional<Model> solve();
  std::optional<Model> solve(std::span<const Lit> assumptions);
  std::optional<Model> solve(std::initializer_list<Lit> assumptions);

  // Number of stored (problem, not learned) clauses.
  size_t clause_count() const { return original_.size(); }
  // True once the clause set has been proven unsatisfiable with no
  // assumptions involved.
  bool known_unsat() const { return unsat_; }

  // Visits every stored problem clause in insertion order.
  void for_each_clause(const std::function<void(std::span<const Lit>)>& fn) const;

  struct Stats {
    int64_t conflicts = 0;
    int64_t decisions = 0;
    int64_t propagations = 0;
    int64_t restarts = 0;
    int64_t learned_deleted = 0;
  };
  const Stats& stats() const { return stats_; }

 private:
  using ClauseRef = uint32_t;
  static constexpr ClauseRef kNoClause = UINT32_MAX;

  struct Watcher {
    ClauseRef cref;
    int blocker;  // literal code
  };

  // clause layout in arena_: [size][flags|lbd<<8][lit codes...]
  uint32_t clause_size(ClauseRef c) const { return arena_[c]; }
  uint32_t* clause_lits(ClauseRef c) { return arena_.data() + c + 2; }
  const uint32_t* clause_lits(ClauseRef c) const { return arena_.data() + c + 2; }
  bool clause_learned(ClauseRef c) const { return (arena_[c + 1] & 1u) != 0; }
  bool clause_dead(ClauseRef c) const { return (arena_[c + 1] & 2u) != 0; }
  void mark_dead(ClauseRef c) { arena_[c + 1] |= 2u; }
  uint32_t clause_lbd(ClauseRef c) const { return arena_[c + 1] >> 8; }

  ClauseRef alloc_clause(std::span<const int> codes, bool learned, uint32_t lbd);
  void attach_clause(ClauseRef c);
  void detach_clause(ClauseRef c);

  int lit_value(int code) const {
    int8_t a = assign_[static_cast<size_t>(code >> 1)];
    if (a == 0) return 0;
    return (code & 1) ? -a : a;
  }
  int decision_level() const { return static_cast<int>(trail_lim_.size()); }

  void enqueue(int code, ClauseRef reason);
  ClauseRef propagate();
  void analyze(ClauseRef confl, std::vector<int>& learnt, int& bt_level, uint32_t& lbd);
  bool lit_redundant(int code);
  void cancel_until(int level);
  int pick_branch_var();
  void bump_var(int var);
  void decay_activity();
  void reduce_learned();
  std::optional<Model> extract_model();

  // heap of unassigned candidates ordered by (activity desc, index asc)
  bool heap_less(int a, int b) const;
  void heap_insert(int var);
  void heap_sift_up(size_t i);
  void heap_sift_down(size_t i);
  int heap_pop();

  int num_vars_ = 0;
  bool unsat_ = false;
  int true_var_ = 0;

  std::vector<uint32_t> arena_;
  std::vector<ClauseRef> original_;
  std::vector<ClauseRef> learned_;
  size_t learned_active_ = 0;

  std::vector<std::vector<Watcher>> watches_;  // indexed by literal code
  std::vector<int8_t> assign_;                 // per var: 0 undef, +1 true, -1 false
  std::vector<int32_t> level_;
  std::vector<ClauseRef> reason_;
  std::vector<uint8_t> phase_;  // saved polarity, decides the branch sign
  std::vector<int> trail_;      // literal codes in assignment order
  std::vector<int> trail_lim_;
  size_t qhead_ = 0;

  std::vector<double> activity_;
  double act_inc_ = 1.0;
  std::vector<int> heap_;      // var indices
  std::vector<int> heap_pos_;  // var -> position+1, 0 = absent

  std::vector<uint8_t> seen_;
  std::vector<int> analyze_toclear_;
  std::vector<int64_t> lbd_stamp_;
  int64_t lbd_counter_ = 0;

  std::vector<int> scratch_;
  Stats stats_;
};

}  // namespace aoc::sat
