#include "aoc/sat/solver.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace aoc::sat {

namespace {
constexpr double kActivityDecay = 0.95;
constexpr double kActivityLimit = 1e100;
constexpr int kFirstRestart = 100;   // conflicts before the first restart
constexpr uint32_t kKeepLbd = 4;     // learned clauses at or below survive reduction
}  // namespace

CnfInstance::CnfInstance() {
  // slot 0 of per-variable arrays is unused
  assign_.push_back(0);
  level_.push_back(0);
  reason_.push_back(kNoClause);
  phase_.push_back(0);
  activity_.push_back(0.0);
  heap_pos_.push_back(0);
  seen_.push_back(0);
  lbd_stamp_.push_back(0);
  watches_.resize(2);
}

int CnfInstance::new_var() {
  ++num_vars_;
  assign_.push_back(0);
  level_.push_back(0);
  reason_.push_back(kNoClause);
  phase_.push_back(0);  // first branch tries the variable false
  activity_.push_back(0.0);
  heap_pos_.push_back(0);
  seen_.push_back(0);
  lbd_stamp_.push_back(0);
  watches_.resize(watches_.size() + 2);
  heap_insert(num_vars_);
  return num_vars_;
}

Lit CnfInstance::true_lit() {
  if (true_var_ == 0) {
    true_var_ = new_var();
    add_clause({Lit::pos(true_var_)});
  }
  return Lit::pos(true_var_);
}

CnfInstance::ClauseRef CnfInstance::alloc_clause(std::span<const int> codes, bool learned,
                                                 uint32_t lbd) {
  ClauseRef c = static_cast<ClauseRef>(arena_.size());
  arena_.push_back(static_cast<uint32_t>(codes.size()));
  arena_.push_back((learned ? 1u : 0u) | (lbd << 8));
  for (int code : codes) arena_.push_back(static_cast<uint32_t>(code));
  return c;
}

void CnfInstance::attach_clause(ClauseRef c) {
  const uint32_t* lits = clause_lits(c);
  watches_[lits[0]].push_back({c, static_cast<int>(lits[1])});
  watches_[lits[1]].push_back({c, static_cast<int>(lits[0])});
}

void CnfInstance::detach_clause(ClauseRef c) {
  const uint32_t* lits = clause_lits(c);
  for (int k = 0; k < 2; ++k) {
    auto& ws = watches_[lits[k]];
    for (size_t i = 0; i < ws.size(); ++i) {
      if (ws[i].cref == c) {
        ws[i] = ws.back();
        ws.pop_back();
        break;
      }
    }
  }
}

void CnfInstance::add_clause(std::initializer_list<Lit> lits) {
  add_clause(std::span<const Lit>(lits.begin(), lits.size()));
}

void CnfInstance::add_clause(std::span<const Lit> lits) {
  assert(decision_level() == 0);
  scratch_.clear();
  for (Lit l : lits) {
    if (!l.defined() || l.var() > num_vars_)
      throw std::invalid_argument("clause references unallocated variable");
    scratch_.push_back(l.index());
  }
  std::sort(scratch_.begin(), scratch_.end());
  scratch_.erase(std::unique(scratch_.begin(), scratch_.end()), scratch_.end());
  for (size_t i = 0; i + 1 < scratch_.size(); ++i)
    if ((scratch_[i] ^ scratch_[i + 1]) == 1) return;  // tautology: x with ~x

  ClauseRef c = alloc_clause(scratch_, false, 0);
  original_.push_back(c);

  // Place the clause for solving, honoring whatever is already forced at the
  // root level.
  int n_unassigned = 0, n_true = 0;
  for (size_t i = 0; i < scratch_.size(); ++i) {
    int v = lit_value(scratch_[i]);
    if (v > 0) ++n_true;
    if (v == 0) std::swap(scratch_[i], scratch_[n_unassigned++]);
  }
  if (n_true > 0) return;  // satisfied at the root forever, no need to watch
  if (n_unassigned == 0) {
    unsat_ = true;
    return;
  }
  if (n_unassigned == 1) {
    enqueue(scratch_[0], kNoClause);
    if (propagate() != kNoClause) unsat_ = true;
    return;
  }
  // rewrite stored literal order so the two watched ones sit up front
  uint32_t* stored = clause_lits(c);
  for (size_t i = 0; i < scratch_.size(); ++i) stored[i] = static_cast<uint32_t>(scratch_[i]);
  attach_clause(c);
}

void CnfInstance::enqueue(int code, ClauseRef reason) {
  int v = code >> 1;
  assert(assign_[v] == 0);
  assign_[static_cast<size_t>(v)] = (code & 1) ? -1 : 1;
  level_[static_cast<size_t>(v)] = decision_level();
  reason_[static_cast<size_t>(v)] = reason;
  trail_.push_back(code);
}

CnfInstance::ClauseRef CnfInstance::propagate() {
  while (qhead_ < trail_.size()) {
    int p = trail_[qhead_++];
    ++stats_.propagations;
    int np = p ^ 1;  // literal that just became false
    auto& ws = watches_[static_cast<size_t>(np)];
    size_t i = 0, j = 0;
    while (i < ws.size()) {
      Watcher w = ws[i];
      if (lit_value(w.blocker) > 0) {
        ws[j++] = ws[i++];
        continue;
      }
      ClauseRef c = w.cref;
      uint32_t* lits = clause_lits(c);
      if (static_cast<int>(lits[0]) == np) std::swap(lits[0], lits[1]);
      int first = static_cast<int>(lits[0]);
      if (first != w.blocker && lit_value(first) > 0) {
        ws[j++] = {c, first};
        ++i;
        continue;
      }
      uint32_t size = clause_size(c);
      bool moved = false;
      for (uint32_t t = 2; t < size; ++t) {
        if (lit_value(static_cast<int>(lits[t])) >= 0) {
          std::swap(lits[1], lits[t]);
          watches_[lits[1]].push_back({c, first});
          moved = true;
          break;
        }
      }
      if (moved) {
        ++i;  // watcher migrated to another literal
        continue;
      }
      ws[j++] = {c, first};
      ++i;
      if (lit_value(first) < 0) {
        while (i < ws.size()) ws[j++] = ws[i++];
        ws.resize(j);
        qhead_ = trail_.size();
        return c;
      }
      enqueue(first, c);
    }
    ws.resize(j);
  }
  return kNoClause;
}

void CnfInstance::bump_var(int var) {
  activity_[static_cast<size_t>(var)] += act_inc_;
  if (activity_[static_cast<size_t>(var)] > kActivityLimit) {
    for (int v = 1; v <= num_vars_; ++v) activity_[static_cast<size_t>(v)] *= 1.0 / kActivityLimit;
    act_inc_ *= 1.0 / kActivityLimit;
  }
  int pos = heap_pos_[static_cast<size_t>(var)];
  if (pos != 0) heap_sift_up(static_cast<size_t>(pos - 1));
}

void CnfInstance::decay_activity() { act_inc_ *= 1.0 / kActivityDecay; }

// Conflict analysis: resolve backwards over the trail until the first unique
// implication point, collecting the asserting clause.
void CnfInstance::analyze(ClauseRef confl, std::vector<int>& learnt, int& bt_level,
                          uint32_t& lbd) {
  learnt.clear();
  learnt.push_back(0);  // slot for the asserting literal
  analyze_toclear_.clear();

  int path = 0;
  int p = -1;
  size_t index = trail_.size();

  for (;;) {
    assert(confl != kNoClause);
    const uint32_t* lits = clause_lits(confl);
    uint32_t size = clause_size(confl);
    for (uint32_t k = (p == -1 ? 0u : 1u); k < size; ++k) {
      int q = static_cast<int>(lits[k]);
      int v = q >> 1;
      if (!seen_[static_cast<size_t>(v)] && level_[static_cast<size_t>(v)] > 0) {
        seen_[static_cast<size_t>(v)] = 1;
        analyze_toclear_.push_back(v);
        bump_var(v);
        if (level_[static_cast<size_t>(v)] >= decision_level())
          ++path;
        else
          learnt.push_back(q);
      }
    }
    while (!seen_[static_cast<size_t>(trail_[index - 1] >> 1)]) --index;
    --index;
    p = trail_[index];
    seen_[static_cast<size_t>(p >> 1)] = 0;
    confl = reason_[static_cast<size_t>(p >> 1)];
    if (--path == 0) break;
  }
  learnt[0] = p ^ 1;

  // Cheap self-subsumption: drop literals whose whole reason is already in
  // the clause.
  size_t out = 1;
  for (size_t i = 1; i < learnt.size(); ++i) {
    int v = learnt[i] >> 1;
    if (reason_[static_cast<size_t>(v)] == kNoClause || !lit_redundant(learnt[i]))
      learnt[out++] = learnt[i];
  }
  learnt.resize(out);

  if (learnt.size() == 1) {
    bt_level = 0;
  } else {
    size_t max_i = 1;
    for (size_t i = 2; i < learnt.size(); ++i)
      if (level_[static_cast<size_t>(learnt[i] >> 1)] >
          level_[static_cast<size_t>(learnt[max_i] >> 1)])
        max_i = i;
    std::swap(learnt[1], learnt[max_i]);
    bt_level = level_[static_cast<size_t>(learnt[1] >> 1)];
  }

  ++lbd_counter_;
  lbd = 0;
  for (int code : learnt) {
    int lv = level_[static_cast<size_t>(code >> 1)];
    if (lbd_stamp_[static_cast<size_t>(lv)] != lbd_counter_) {
      lbd_stamp_[static_cast<size_t>(lv)] = lbd_counter_;
      ++lbd;
    }
  }

  for (int v : analyze_toclear_) seen_[static_cast<size_t>(v)] = 0;
}

bool CnfInstance::lit_redundant(int code) {
  ClauseRef r = reason_[static_cast<size_t>(code >> 1)];
  const uint32_t* lits = clause_lits(r);
  uint32_t size = clause_size(r);
  for (uint32_t k = 1; k < size; ++k) {
    int v = static_cast<int>(lits[k]) >> 1;
    if (level_[static_cast<size_t>(v)] > 0 && !seen_[static_cast<size_t>(v)]) return false;
  }
  return true;
}

void CnfInstance::cancel_until(int lvl) {
  if (decision_level() <= lvl) return;
  for (size_t t = trail_.size(); t > static_cast<size_t>(trail_lim_[static_cast<size_t>(lvl)]);
       --t) {
    int code = trail_[t - 1];
    int v = code >> 1;
    phase_[static_cast<size_t>(v)] = (code & 1) ? 0 : 1;
    assign_[static_cast<size_t>(v)] = 0;
    reason_[static_cast<size_t>(v)] = kNoClause;
    if (heap_pos_[static_cast<size_t>(v)] == 0) heap_insert(v);
  }
  trail_.resize(static_cast<size_t>(trail_lim_[static_cast<size_t>(lvl)]));
  trail_lim_.resize(static_cast<size_t>(lvl));
  qhead_ = trail_.size();
}

bool CnfInstance::heap_less(int a, int b) const {
  double aa = activity_[static_cast<size_t>(a)], ab = activity_[static_cast<size_t>(b)];
  if (aa != ab) return aa > ab;  // higher activity first
  return a < b;                  // then lowest index
}

void CnfInstance::heap_insert(int var) {
  heap_.push_back(var);
  heap_pos_[static_cast<size_t>(var)] = static_cast<int>(heap_.size());
  heap_sift_up(heap_.size() - 1);
}

void CnfInstance::heap_sift_up(size_t i) {
  int v = heap_[i];
  while (i > 0) {
    size_t parent = (i - 1) / 2;
    if (!heap_less(v, heap_[parent])) break;
    heap_[i] = heap_[parent];
    heap_pos_[static_cast<size_t>(heap_[i])] = static_cast<int>(i + 1);
    i = parent;
  }
  heap_[i] = v;
  heap_pos_[static_cast<size_t>(v)] = static_cast<int>(i + 1);
}

void CnfInstance::heap_sift_down(size_t i) {
  int v = heap_[i];
  size_t n = heap_.size();
  for (;;) {
    size_t child = 2 * i + 1;
    if (child >= n) break;
    if (child + 1 < n && heap_less(heap_[child + 1], heap_[child])) ++child;
    if (!heap_less(heap_[child], v)) break;
    heap_[i] = heap_[child];
    heap_pos_[static_cast<size_t>(heap_[i])] = static_cast<int>(i + 1);
    i = child;
  }
  heap_[i] = v;
  heap_pos_[static_cast<size_t>(v)] = static_cast<int>(i + 1);
}

int CnfInstance::heap_pop() {
  int top = heap_[0];
  heap_pos_[static_cast<size_t>(top)] = 0;
  int last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_pos_[static_cast<size_t>(last)] = 1;
    heap_sift_down(0);
  }
  return top;
}

int CnfInstance::pick_branch_var() {
  while (!heap_.empty()) {
    int v = heap_pop();
    if (assign_[static_cast<size_t>(v)] == 0) return v;
  }
  return 0;
}

void CnfInstance::reduce_learned() {
  std::vector<ClauseRef> cand;
  for (ClauseRef c : learned_) {
    if (clause_dead(c)) continue;
    if (clause_lbd(c) <= kKeepLbd) continue;
    int first = static_cast<int>(clause_lits(c)[0]);
    int v = first >> 1;
    bool locked = assign_[static_cast<size_t>(v)] != 0 &&
                  reason_[static_cast<size_t>(v)] == c && lit_value(first) > 0;
    if (!locked) cand.push_back(c);
  }
  std::sort(cand.begin(), cand.end(), [this](ClauseRef a, ClauseRef b) {
    uint32_t la = clause_lbd(a), lb = clause_lbd(b);
    if (la != lb) return la < lb;
    uint32_t sa = clause_size(a), sb = clause_size(b);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  for (size_t i = cand.size() / 2; i < cand.size(); ++i) {
    detach_clause(cand[i]);
    mark_dead(cand[i]);
    --learned_active_;
    ++stats_.learned_deleted;
  }
  std::erase_if(learned_, [this](ClauseRef c) { return clause_dead(c); });
}

std::optional<Model> CnfInstance::extract_model() {
  std::vector<uint8_t> values(static_cast<size_t>(num_vars_) + 1, 0);
  for (int v = 1; v <= num_vars_; ++v) values[static_cast<size_t>(v)] = assign_[static_cast<size_t>(v)] > 0 ? 1 : 0;
  return Model(std::move(values));
}

std::optional<Model> CnfInstance::solve() { return solve(std::span<const Lit>()); }

std::optional<Model> CnfInstance::solve(std::initializer_list<Lit> assumptions) {
  return solve(std::span<const Lit>(assumptions.begin(), assumptions.size()));
}

std::optional<Model> CnfInstance::solve(std::span<const Lit> assumptions) {
  if (unsat_) return std::nullopt;
  for (Lit a : assumptions)
    if (!a.defined() || a.var() > num_vars_)
      throw std::invalid_argument("assumption references unallocated variable");

  cancel_until(0);
  if (propagate() != kNoClause) {
    unsat_ = true;
    return std::nullopt;
  }

  int64_t restart_limit = kFirstRestart;
  int64_t conflicts_since_restart = 0;
  std::vector<int> learnt;

  for (;;) {
    ClauseRef confl = propagate();
    if (confl != kNoClause) {
      ++stats_.conflicts;
      ++conflicts_since_restart;
      if (decision_level() == 0) {
        unsat_ = true;
        return std::nullopt;
      }
      int bt_level;
      uint32_t lbd;
      analyze(confl, learnt, bt_level, lbd);
      cancel_until(bt_level);
      if (learnt.size() == 1) {
        enqueue(learnt[0], kNoClause);
      } else {
        ClauseRef c = alloc_clause(learnt, true, lbd);
        learned_.push_back(c);
        ++learned_active_;
        attach_clause(c);
        enqueue(learnt[0], c);
      }
      decay_activity();
      if (learned_active_ > std::max<size_t>(2 * original_.size(), 512)) reduce_learned();
      if (conflicts_since_restart >= restart_limit) {
        restart_limit += restart_limit / 2;  // geometric, factor 1.5
        conflicts_since_restart = 0;
        ++stats_.restarts;
        cancel_until(0);
      }
    } else {
      // assumptions act as forced decisions on the first levels
      bool decided = false;
      while (decision_level() < static_cast<int>(assumptions.size())) {
        Lit a = assumptions[static_cast<size_t>(decision_level())];
        int v = lit_value(a.index());
        if (v > 0) {
          trail_lim_.push_back(static_cast<int>(trail_.size()));  // dummy level
        } else if (v < 0) {
          cancel_until(0);
          return std::nullopt;  // assumptions contradict the instance
        } else {
          trail_lim_.push_back(static_cast<int>(trail_.size()));
          enqueue(a.index(), kNoClause);
          decided = true;
          break;
        }
      }
      if (decided) continue;
      int v = pick_branch_var();
      if (v == 0) {
        auto model = extract_model();
        cancel_until(0);
        return model;
      }
      ++stats_.decisions;
      trail_lim_.push_back(static_cast<int>(trail_.size()));
      enqueue(2 * v + (phase_[static_cast<size_t>(v)] ? 0 : 1), kNoClause);
    }
  }
}

void CnfInstance::for_each_clause(const std::function<void(std::span<const Lit>)>& fn) const {
  std::vector<Lit> tmp;
  for (ClauseRef c : original_) {
    const uint32_t* lits = clause_lits(c);
    uint32_t size = clause_size(c);
    tmp.clear();
    for (uint32_t k = 0; k < size; ++k) tmp.push_back(Lit::from_index(static_cast<int>(lits[k])));
    fn(std::span<const Lit>(tmp.data(), tmp.size()));
  }
}

}  // namespace aoc::sat
