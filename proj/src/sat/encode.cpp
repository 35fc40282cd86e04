#include "aoc/sat/encode.hpp"

#include <stdexcept>
#include <string>

namespace aoc::sat {

Lit gate_and(CnfInstance& cnf, Lit a, Lit b) {
  Lit c = Lit::pos(cnf.new_var());
  cnf.add_clause({~c, a});
  cnf.add_clause({~c, b});
  cnf.add_clause({c, ~a, ~b});
  return c;
}

Lit gate_or(CnfInstance& cnf, Lit a, Lit b) {
  Lit c = Lit::pos(cnf.new_var());
  cnf.add_clause({c, ~a});
  cnf.add_clause({c, ~b});
  cnf.add_clause({~c, a, b});
  return c;
}

Lit gate_xor(CnfInstance& cnf, Lit a, Lit b) {
  Lit c = Lit::pos(cnf.new_var());
  cnf.add_clause({~c, a, b});
  cnf.add_clause({~c, ~a, ~b});
  cnf.add_clause({c, ~a, b});
  cnf.add_clause({c, a, ~b});
  return c;
}

Lit gate_eq(CnfInstance& cnf, Lit a, Lit b) { return gate_xor(cnf, a, ~b); }

namespace {

void check_bound(std::span<const Lit> lits, int k) {
  if (k < 0 || k > static_cast<int>(lits.size()))
    throw std::invalid_argument("cardinality bound " + std::to_string(k) +
                                " outside 0.." + std::to_string(lits.size()));
}

}  // namespace

// Sinz-style sequential counter: s(i,j) means "at least j of the first i+1
// inputs are true". Only the implications needed for the upper bound are
// emitted.
void at_most_k(CnfInstance& cnf, std::span<const Lit> lits, int k) {
  check_bound(lits, k);
  int n = static_cast<int>(lits.size());
  if (k == n) return;
  if (k == 0) {
    for (Lit l : lits) cnf.add_clause({~l});
    return;
  }
  // s[i][j], i in 0..n-2, j in 0..k-1
  std::vector<std::vector<Lit>> s(static_cast<size_t>(n - 1), std::vector<Lit>(static_cast<size_t>(k)));
  for (auto& row : s)
    for (auto& l : row) l = Lit::pos(cnf.new_var());

  cnf.add_clause({~lits[0], s[0][0]});
  for (int j = 1; j < k; ++j) cnf.add_clause({~s[0][static_cast<size_t>(j)]});
  for (int i = 1; i < n - 1; ++i) {
    cnf.add_clause({~lits[static_cast<size_t>(i)], s[static_cast<size_t>(i)][0]});
    cnf.add_clause({~s[static_cast<size_t>(i - 1)][0], s[static_cast<size_t>(i)][0]});
    for (int j = 1; j < k; ++j) {
      cnf.add_clause({~lits[static_cast<size_t>(i)], ~s[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)],
                      s[static_cast<size_t>(i)][static_cast<size_t>(j)]});
      cnf.add_clause({~s[static_cast<size_t>(i - 1)][static_cast<size_t>(j)],
                      s[static_cast<size_t>(i)][static_cast<size_t>(j)]});
    }
    cnf.add_clause({~lits[static_cast<size_t>(i)], ~s[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)]});
  }
  cnf.add_clause({~lits[static_cast<size_t>(n - 1)], ~s[static_cast<size_t>(n - 2)][static_cast<size_t>(k - 1)]});
}

void at_least_k(CnfInstance& cnf, std::span<const Lit> lits, int k) {
  check_bound(lits, k);
  int n = static_cast<int>(lits.size());
  if (k == 0) return;
  if (k == n) {
    for (Lit l : lits) cnf.add_clause({l});
    return;
  }
  // at least k true == at most n-k false
  std::vector<Lit> negs;
  negs.reserve(lits.size());
  for (Lit l : lits) negs.push_back(~l);
  at_most_k(cnf, negs, n - k);
}

// Full ladder: s(i,j) <-> s(i-1,j) or (x_i and s(i-1,j-1)), with both
// directions emitted so a single unit clause on an output enforces a lower
// bound as well.
UnaryCounter::UnaryCounter(CnfInstance& cnf, std::span<const Lit> inputs) {
  int n = static_cast<int>(inputs.size());
  std::vector<Lit> prev;  // row i-1: prev[j-1] = "first i-1 inputs have >= j true"
  for (int i = 1; i <= n; ++i) {
    Lit x = inputs[static_cast<size_t>(i - 1)];
    std::vector<Lit> row(static_cast<size_t>(i));
    for (int j = 1; j <= i; ++j) {
      Lit s = Lit::pos(cnf.new_var());
      row[static_cast<size_t>(j - 1)] = s;
      bool have_a = j <= i - 1;       // s(i-1, j)
      bool b_is_true = j == 1;        // s(i-1, 0) is vacuously true
      Lit a = have_a ? prev[static_cast<size_t>(j - 1)] : Lit();
      Lit b = b_is_true ? Lit() : prev[static_cast<size_t>(j - 2)];
      if (have_a && b_is_true) {
        // s <-> a or x
        cnf.add_clause({~s, a, x});
        cnf.add_clause({~a, s});
        cnf.add_clause({~x, s});
      } else if (have_a && !b_is_true) {
        cnf.add_clause({~s, a, x});
        cnf.add_clause({~s, a, b});
        cnf.add_clause({~a, s});
        cnf.add_clause({~x, ~b, s});
      } else if (!have_a && b_is_true) {
        // j == i == 1: s <-> x
        cnf.add_clause({~s, x});
        cnf.add_clause({~x, s});
      } else {
        // j == i > 1: s <-> x and s(i-1, i-1)
        cnf.add_clause({~s, x});
        cnf.add_clause({~s, b});
        cnf.add_clause({~x, ~b, s});
      }
    }
    prev = std::move(row);
  }
  geq_ = std::move(prev);
}

int FdVar::decode(const Model& m) const {
  for (int v = 0; v < domain_size(); ++v)
    if (m.value(is(v))) return v;
  throw std::logic_error("model selects no value for finite-domain variable");
}

FdVar fd_var(CnfInstance& cnf, int n) {
  if (n < 1) throw std::invalid_argument("finite domain needs at least one value");
  std::vector<Lit> sel;
  sel.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sel.push_back(Lit::pos(cnf.new_var()));
  cnf.add_clause(std::span<const Lit>(sel.data(), sel.size()));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) cnf.add_clause({~sel[static_cast<size_t>(i)], ~sel[static_cast<size_t>(j)]});
  return FdVar(std::move(sel));
}

void all_different(CnfInstance& cnf, std::span<const FdVar> vars) {
  if (vars.empty()) return;
  int n = vars[0].domain_size();
  for (const FdVar& v : vars)
    if (v.domain_size() != n) throw std::invalid_argument("all_different needs a common domain");
  for (int value = 0; value < n; ++value)
    for (size_t i = 0; i < vars.size(); ++i)
      for (size_t j = i + 1; j < vars.size(); ++j)
        cnf.add_clause({~vars[i].is(value), ~vars[j].is(value)});
}

std::optional<MaxCountResult> maximize_true_count(CnfInstance& cnf, std::span<const Lit> lits) {
  auto count_true = [&lits](const Model& m) {
    int k = 0;
    for (Lit l : lits)
      if (m.value(l)) ++k;
    return k;
  };

  auto first = cnf.solve();
  if (!first) return std::nullopt;
  MaxCountResult best{count_true(*first), std::move(*first)};
  int n = static_cast<int>(lits.size());
  if (best.k_max == n) return best;

  UnaryCounter counter(cnf, lits);
  while (best.k_max < n) {
    cnf.add_clause({counter.count_geq(best.k_max + 1)});
    auto m = cnf.solve();
    if (!m) break;
    best.k_max = count_true(*m);
    best.model = std::move(*m);
  }
  return best;
}

}  // namespace aoc::sat
