#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace aoc::search {

// Two-component cost compared lexicographically: primary length, then the
// number of direction changes.  Addition is componentwise.
struct LexObjective {
  int64_t length = 0;
  int64_t turns = 0;

  friend auto operator<=>(const LexObjective&, const LexObjective&) = default;
  LexObjective operator+(const LexObjective& o) const {
    return {length + o.length, turns + o.turns};
  }
};

class CycleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One way to realize a key: a local cost plus the keys it decomposes into.
template <typename Key>
struct Derivation {
  LexObjective delta;
  std::vector<Key> subkeys;
};

// Memoized minimization over a derivation relation.  The value of a key is
// the minimum over its derivations of delta + sum of subkey values.  Ties go
// to the earliest derivation in the list, which makes results deterministic
// and lets callers encode a preference order.  The relation must be
// well-founded: a key reachable from itself raises CycleError.
template <typename Key>
class MemoMin {
 public:
  struct Result {
    LexObjective value;
    int chosen_index = -1;  // index into derive(key), for witness rebuilding
  };

  using DeriveFn = std::function<std::vector<Derivation<Key>>(const Key&)>;

  explicit MemoMin(DeriveFn derive) : derive_(std::move(derive)) {}

  const Result& eval(const Key& key) {
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (!in_progress_.insert(key).second)
      throw CycleError("memo_min: derivation cycle");
    std::vector<Derivation<Key>> options = derive_(key);
    if (options.empty()) {
      in_progress_.erase(key);
      throw std::logic_error("memo_min: key has no derivation");
    }
    Result best;
    for (size_t i = 0; i < options.size(); ++i) {
      LexObjective total = options[i].delta;
      for (const Key& sub : options[i].subkeys) total = total + eval(sub).value;
      if (best.chosen_index < 0 || total < best.value) {
        best.value = total;
        best.chosen_index = static_cast<int>(i);
      }
    }
    in_progress_.erase(key);
    return memo_.emplace(key, best).first->second;
  }

  size_t size() const { return memo_.size(); }

 private:
  DeriveFn derive_;
  std::map<Key, Result> memo_;
  std::set<Key> in_progress_;
};

}  // namespace aoc::search
