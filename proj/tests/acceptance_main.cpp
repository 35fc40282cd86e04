// Acceptance gate for the whole toolkit: each numbered check prints exactly
// one [PASS]/[FAIL] line with its timings, and the exit status is the number
// of failed checks.  These are heavier end-to-end cross-validations than the
// unit suite; the oracles live in tests/support and share nothing with the
// code paths they judge.
//
// Check 6 has an optional full-scale companion run (45-bit adder, 4 swapped
// pairs) that only executes when AOC_ACCEPT_LONG=1 is set; it prints a
// [SKIP] line otherwise and never affects the exit status unless it runs and
// produces a wrong answer.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aoc/days/ccrev.hpp"
#include "aoc/days/clique.hpp"
#include "aoc/days/keypad.hpp"
#include "aoc/days/maze.hpp"
#include "aoc/days/wires.hpp"
#include "aoc/sat/bitvec.hpp"
#include "aoc/sat/encode.hpp"
#include "aoc/sat/solver.hpp"
#include "support/clique_oracle.hpp"
#include "support/enumerate.hpp"
#include "support/keypad_oracle.hpp"
#include "support/maze_oracle.hpp"

using namespace aoc::days;
using namespace aoc::sat;

namespace {

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(s < 10 ? 3 : 1) << s << "s";
  return os.str();
}

// Collects the first failure reason; later ones only flip the flag.
struct Check {
  bool ok = true;
  std::string reason;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) reason = what;
    ok = ok && cond;
  }
};

void run_check(int id, const std::string& label,
               const std::function<std::string(Check&)>& body, int& failures) {
  Check c;
  std::string timing;
  try {
    timing = body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("unexpected exception: ") + e.what());
  }
  std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": "
            << label;
  if (!timing.empty()) std::cout << " (" << timing << ")";
  if (!c.ok) std::cout << " -- " << c.reason;
  std::cout << std::endl;
  if (!c.ok) ++failures;
}

std::vector<Lit> fresh_vars(CnfInstance& cnf, int n) {
  std::vector<Lit> vars;
  for (int i = 0; i < n; ++i) vars.push_back(Lit::pos(cnf.new_var()));
  return vars;
}

std::vector<Lit> input_assumptions(const std::vector<Lit>& vars, uint32_t bits) {
  std::vector<Lit> assumps;
  for (size_t i = 0; i < vars.size(); ++i)
    assumps.push_back(((bits >> i) & 1) ? vars[i] : ~vars[i]);
  return assumps;
}

void bind_bv(std::vector<Lit>& assumps, const BitVec& v, uint64_t value) {
  for (int i = 0; i < v.width(); ++i)
    assumps.push_back(((value >> i) & 1) ? v[i] : ~v[i]);
}

// True when the circuit computes x + y for every input pair (2^(2W) checks).
bool exact_adder(Circuit c) {
  const uint64_t lim = uint64_t{1} << c.in_width;
  try {
    for (uint64_t x = 0; x < lim; ++x)
      for (uint64_t y = 0; y < lim; ++y) {
        set_inputs(c, x, y);
        if (eval_circuit(c) != x + y) return false;
      }
  } catch (const EvalError&) {
    return false;  // a candidate swap may create a cycle or orphan a wire
  }
  return true;
}

// The repair answer is a flat sorted name list; recover whether SOME pairing
// of those names, applied as output swaps, yields an exhaustively exact adder.
bool some_pairing_repairs(const Circuit& c, std::vector<std::string> names) {
  if (names.empty()) return exact_adder(c);
  for (size_t j = 1; j < names.size(); ++j) {
    Circuit swapped = c;
    for (Gate& g : swapped.gates) {
      if (g.out == names[0]) g.out = names[j];
      else if (g.out == names[j]) g.out = names[0];
    }
    std::vector<std::string> rest;
    for (size_t t = 1; t < names.size(); ++t)
      if (t != j) rest.push_back(names[t]);
    if (some_pairing_repairs(swapped, rest)) return true;
  }
  return false;
}

const std::vector<int> kQuineProgram{2, 4, 1, 5, 7, 5, 0, 3, 4, 0, 1, 6, 5, 5, 3, 0};
const std::vector<std::string> kSampleCodes{"029A", "980A", "179A", "456A", "379A"};
const std::vector<std::string> kDeepCodes{"671A", "826A", "670A", "085A", "283A"};
const char* kFiveByFive = "#####\n#..E#\n#.#.#\n#S..#\n#####\n";

std::string check_quine_reversal(Check& c) {
  const uint64_t want = 109019476330651ULL;
  auto t0 = Clock::now();
  std::optional<uint64_t> dfs = reverse_min_a_dfs(kQuineProgram);
  double dfs_t = secs_since(t0);
  t0 = Clock::now();
  std::optional<uint64_t> sat = reverse_min_a_sat(kQuineProgram);
  double sat_t = secs_since(t0);
  c.expect(dfs.has_value() && *dfs == want, "dfs reversal wrong");
  c.expect(sat.has_value() && *sat == want, "sat reversal wrong");
  c.expect(run(kQuineProgram, want) == kQuineProgram,
           "replay does not emit the program");
  c.expect(dfs_t < 1.0, "dfs over the 1s budget");
  c.expect(sat_t < 120.0, "sat over the 120s budget");
  return "dfs " + fmt_secs(dfs_t) + ", sat " + fmt_secs(sat_t);
}

std::string check_deep_keypad(Check& c) {
  auto t0 = Clock::now();
  int64_t sum = complexity_sum(kDeepCodes, 25);
  double t = secs_since(t0);
  c.expect(sum == 226179529377982LL,
           "expected 226179529377982, got " + std::to_string(sum));
  c.expect(t < 1.0, "over the 1s budget");
  return fmt_secs(t);
}

std::string check_swap_space(Check& c) {
  boost::multiprecision::cpp_int size = swap_space_size(302, 4);
  boost::multiprecision::cpp_int bound("100000000000000000");  // 10^17
  std::ostringstream os;
  os << size;
  c.expect(size > bound, "size " + os.str() + " not above 10^17");
  return "size " + os.str();
}

std::string check_maze_tiling(Check& c) {
  auto t0 = Clock::now();
  Maze worked = parse_maze(kFiveByFive);
  c.expect(maze_min_cost(worked) == std::optional<int64_t>(1004),
           "worked 5x5 cheapest run wrong");
  c.expect(optimal_tiles(worked) == std::optional<int64_t>(5),
           "worked 5x5 tile count wrong");

  std::mt19937_64 rng(2024);
  int enumerated = 0;
  for (int i = 0; i < 30; ++i) {
    Maze m = testsupport::random_maze(rng, 13);
    auto fast = optimal_tiles(m);
    auto via = via_point_oracle(m);
    c.expect(fast == via, "tiling engines disagree on maze " + std::to_string(i));
    if (m.rows <= 7 && m.cols <= 7) {
      c.expect(fast == testsupport::enumerated_tiles(m),
               "enumeration disagrees on maze " + std::to_string(i));
      ++enumerated;
    }
  }
  // extra forced-small batch so the exhaustive oracle always gets real work
  for (int i = 0; i < 10; ++i) {
    Maze m = testsupport::random_maze(rng, 7);
    auto fast = optimal_tiles(m);
    c.expect(fast == via_point_oracle(m),
             "tiling engines disagree on small maze " + std::to_string(i));
    c.expect(fast == testsupport::enumerated_tiles(m),
             "enumeration disagrees on small maze " + std::to_string(i));
    ++enumerated;
  }
  double t = secs_since(t0);
  c.expect(t < 60.0, "suite over the 60s budget");
  return "30 random + " + std::to_string(enumerated) + " enumerated, " + fmt_secs(t);
}

std::string check_planted_cliques(Check& c) {
  std::mt19937_64 rng(77);
  double worst = 0.0;
  int smallest = 50;
  for (int i = 0; i < 20; ++i) {
    std::vector<int> verts(50);
    std::iota(verts.begin(), verts.end(), 0);
    std::shuffle(verts.begin(), verts.end(), rng);
    std::vector<int> planted(verts.begin(), verts.begin() + 8);
    LanGraph g = testsupport::random_graph(rng, 50, 30, planted);

    auto t0 = Clock::now();
    std::vector<int> reference = max_clique_bk(g);
    std::vector<int> found = max_clique_sat(g);
    double t = secs_since(t0);
    worst = std::max(worst, t);

    c.expect(found.size() == reference.size(),
             "engines disagree on graph " + std::to_string(i));
    c.expect(found.size() >= 8, "planted clique missed on graph " + std::to_string(i));
    c.expect(testsupport::is_clique(g, found),
             "sat answer is not a clique on graph " + std::to_string(i));
    c.expect(t < 60.0, "graph " + std::to_string(i) + " over the 60s budget");
    smallest = std::min(smallest, static_cast<int>(found.size()));
  }
  return "20 graphs, min clique " + std::to_string(smallest) + ", worst " +
         fmt_secs(worst);
}

std::string check_adder_repair(Check& c) {
  double worst = 0.0;
  int done = 0;
  for (int bits : {4, 8, 12}) {
    for (int pairs : {1, 2}) {
      for (uint64_t seed = 1; seed <= 20; ++seed) {
        GenResult gen = gen_instance(bits, pairs, seed);
        Circuit circuit = parse_circuit(gen.text);

        auto t0 = Clock::now();
        auto found = find_swaps_sat(circuit, pairs);
        double t = secs_since(t0);
        worst = std::max(worst, t);

        std::string tag = "W=" + std::to_string(bits) + " k=" +
                          std::to_string(pairs) + " seed " + std::to_string(seed);
        c.expect(found.has_value(), "no repair found for " + tag);
        if (found)
          c.expect(*found == gen.swapped, "repair differs from planted on " + tag);
        c.expect(t < 60.0, tag + " over the 60s budget");

        // independent exhaustive re-verification of the repair where feasible
        if (found && bits <= 8)
          c.expect(some_pairing_repairs(circuit, *found),
                   "no pairing of the answer repairs " + tag);

        std::vector<std::string> flagged = ripple_structural_check(circuit);
        for (const std::string& wire : gen.swapped)
          c.expect(std::count(flagged.begin(), flagged.end(), wire) == 1,
                   "structural scan missed " + wire + " on " + tag);
        ++done;
        if (!c.ok) return std::to_string(done) + " instances, worst " + fmt_secs(worst);
      }
    }
  }
  return std::to_string(done) + " instances, worst " + fmt_secs(worst);
}

std::string check_solver_and_encoders(Check& c) {
  auto t0 = Clock::now();

  // 1. verdicts vs. brute-force enumeration on 200 random instances
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 200 && c.ok; ++i) {
    int vars = 1 + static_cast<int>(rng() % 12);
    int width = std::min(vars, 1 + static_cast<int>(rng() % 3));
    int clauses = 1 + static_cast<int>(rng() % (4 * vars));
    CnfInstance inst = testsupport::random_cnf(rng, vars, clauses, width);
    auto model = inst.solve();
    bool brute = testsupport::enumerate_sat(inst).has_value();
    c.expect(model.has_value() == brute,
             "verdict mismatch on instance " + std::to_string(i));
    if (model)
      c.expect(testsupport::model_sound(inst, *model),
               "unsound model on instance " + std::to_string(i));
  }

  // 2. gate encoders against their truth tables (inputs + one output var)
  struct GateCase {
    const char* name;
    Lit (*build)(CnfInstance&, Lit, Lit);
    bool (*eval)(bool, bool);
  };
  const GateCase gates[] = {
      {"and", gate_and, [](bool a, bool b) { return a && b; }},
      {"or", gate_or, [](bool a, bool b) { return a || b; }},
      {"xor", gate_xor, [](bool a, bool b) { return a != b; }},
      {"eq", gate_eq, [](bool a, bool b) { return a == b; }},
  };
  for (const GateCase& gc : gates) {
    CnfInstance cnf;
    auto in = fresh_vars(cnf, 2);
    Lit out = gc.build(cnf, in[0], in[1]);
    c.expect(out.var() == 3 && cnf.num_vars() == 3,
             std::string("gate_") + gc.name + " allocates unexpectedly");
    auto clauses = testsupport::clause_list(cnf);
    for (uint32_t bits = 0; bits < 8; ++bits) {
      bool a = bits & 1, b = bits & 2, o = bits & 4;
      c.expect(testsupport::assignment_satisfies(clauses, bits) == (o == gc.eval(a, b)),
               std::string("gate_") + gc.name + " truth table broken");
    }
  }

  // 3. cardinality encoders, exhaustively for n <= 8 and every k
  for (int n = 1; n <= 8 && c.ok; ++n) {
    for (int k = 0; k <= n; ++k) {
      CnfInstance amk;
      auto v1 = fresh_vars(amk, n);
      at_most_k(amk, std::span<const Lit>(v1.data(), v1.size()), k);
      CnfInstance alk;
      auto v2 = fresh_vars(alk, n);
      at_least_k(alk, std::span<const Lit>(v2.data(), v2.size()), k);
      for (uint32_t bits = 0; bits < (1u << n); ++bits) {
        auto a1 = input_assumptions(v1, bits);
        auto a2 = input_assumptions(v2, bits);
        int count = std::popcount(bits);
        c.expect(amk.solve(std::span<const Lit>(a1.data(), a1.size())).has_value() ==
                     (count <= k),
                 "at_most_k wrong at n=" + std::to_string(n));
        c.expect(alk.solve(std::span<const Lit>(a2.data(), a2.size())).has_value() ==
                     (count >= k),
                 "at_least_k wrong at n=" + std::to_string(n));
      }
    }
  }

  // 4. unary counter outputs mirror the exact count
  for (int n = 1; n <= 8 && c.ok; ++n) {
    CnfInstance cnf;
    auto vars = fresh_vars(cnf, n);
    UnaryCounter ctr(cnf, std::span<const Lit>(vars.data(), vars.size()));
    for (uint32_t bits = 0; bits < (1u << n); ++bits) {
      auto assumps = input_assumptions(vars, bits);
      auto m = cnf.solve(std::span<const Lit>(assumps.data(), assumps.size()));
      c.expect(m.has_value(), "counter instance unexpectedly unsatisfiable");
      if (!m) break;
      for (int k = 1; k <= n; ++k)
        c.expect(m->value(ctr.count_geq(k)) == (std::popcount(bits) >= k),
                 "count_geq wrong at n=" + std::to_string(n));
    }
  }

  // 5. one-hot variables and all_different, by model counting
  for (int n = 1; n <= 8; ++n) {
    CnfInstance cnf;
    FdVar v = fd_var(cnf, n);
    auto clauses = testsupport::clause_list(cnf);
    int models = 0;
    for (uint32_t bits = 0; bits < (1u << n); ++bits)
      if (testsupport::assignment_satisfies(clauses, bits)) {
        ++models;
        c.expect(std::popcount(bits) == 1, "non-one-hot fd_var model");
      }
    c.expect(models == n, "fd_var model count wrong at n=" + std::to_string(n));
  }
  {
    CnfInstance cnf;
    std::vector<FdVar> vars;
    for (int i = 0; i < 4; ++i) vars.push_back(fd_var(cnf, 4));
    all_different(cnf, std::span<const FdVar>(vars.data(), vars.size()));
    int tuples = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int d = 0; d < 4; ++d)
          for (int e = 0; e < 4; ++e) {
            std::vector<Lit> assumps{vars[0].is(a), vars[1].is(b), vars[2].is(d),
                                     vars[3].is(e)};
            if (cnf.solve(std::span<const Lit>(assumps.data(), assumps.size()))
                    .has_value())
              ++tuples;
          }
    c.expect(tuples == 24, "all_different admits " + std::to_string(tuples) +
                               " tuples instead of 24");
  }

  // 6. maximize_true_count against enumeration on random instances
  std::mt19937_64 mrng(20240815);
  for (int i = 0; i < 20 && c.ok; ++i) {
    int vars = 2 + static_cast<int>(mrng() % 9);
    int clauses = 1 + static_cast<int>(mrng() % (3 * vars));
    CnfInstance inst = testsupport::random_cnf(mrng, vars, clauses, 2);
    auto all = testsupport::clause_list(inst);
    int best = -1;
    for (uint32_t bits = 0; bits < (1u << vars); ++bits)
      if (testsupport::assignment_satisfies(all, bits))
        best = std::max(best, std::popcount(bits));
    std::vector<Lit> lits;
    for (int v = 1; v <= vars; ++v) lits.push_back(Lit::pos(v));
    auto got = maximize_true_count(inst, std::span<const Lit>(lits.data(), lits.size()));
    if (best < 0)
      c.expect(!got.has_value(), "optimum reported for an unsatisfiable instance");
    else
      c.expect(got.has_value() && got->k_max == best,
               "optimum wrong on instance " + std::to_string(i));
  }

  // 7. bit-vector ops, exhaustive through width 6
  for (int w = 1; w <= 6 && c.ok; ++w) {
    const uint64_t lim = uint64_t{1} << w;
    CnfInstance cnf;
    BitVec a = bv_new(cnf, w);
    BitVec b = bv_new(cnf, w);
    BitVec x = bv_xor(cnf, a, b);
    Lit eq = bv_eq(cnf, a, b);
    BitVec sh = bv_new(cnf, 3);
    BitVec shifted = bv_shr_var(cnf, a, sh);
    for (uint64_t va = 0; va < lim; ++va)
      for (uint64_t vb = 0; vb < lim; ++vb) {
        std::vector<Lit> assumps;
        bind_bv(assumps, a, va);
        bind_bv(assumps, b, vb);
        bind_bv(assumps, sh, vb % 8);
        auto m = cnf.solve(std::span<const Lit>(assumps.data(), assumps.size()));
        c.expect(m.has_value(), "bit-vector instance unexpectedly unsatisfiable");
        if (!m) break;
        c.expect(bv_value(*m, x) == (va ^ vb), "bv_xor wrong");
        c.expect(m->value(eq) == (va == vb), "bv_eq wrong");
        uint64_t want_shift = (vb % 8) >= static_cast<uint64_t>(w) ? 0 : va >> (vb % 8);
        c.expect(bv_value(*m, shifted) == want_shift, "bv_shr_var wrong");
      }

    // slicing and extension are pure bookkeeping on the same vector
    for (int n = 0; n <= w; ++n) {
      CnfInstance scnf;
      BitVec v = bv_new(scnf, w);
      BitVec low = bv_take(v, n);
      BitVec high = bv_drop(v, n);
      BitVec wide = bv_zext(scnf, v, w + 2);
      for (uint64_t val = 0; val < lim; ++val) {
        std::vector<Lit> assumps;
        bind_bv(assumps, v, val);
        auto m = scnf.solve(std::span<const Lit>(assumps.data(), assumps.size()));
        c.expect(m.has_value(), "slice instance unexpectedly unsatisfiable");
        if (!m) break;
        c.expect(bv_value(*m, low) == (n == 0 ? 0 : val & (lim - 1) >> (w - n)),
                 "bv_take wrong");
        c.expect(bv_value(*m, high) == val >> n, "bv_drop wrong");
        c.expect(bv_value(*m, wide) == val, "bv_zext wrong");
      }
    }
  }

  // 8. exact addition for every pair below 2^5
  {
    CnfInstance cnf;
    BitVec a = bv_new(cnf, 5);
    BitVec b = bv_new(cnf, 5);
    BitVec sum = bv_add(cnf, a, b);
    c.expect(sum.width() == 6, "bv_add result width wrong");
    for (uint64_t va = 0; va < 32; ++va)
      for (uint64_t vb = 0; vb < 32; ++vb) {
        std::vector<Lit> assumps;
        bind_bv(assumps, a, va);
        bind_bv(assumps, b, vb);
        auto m = cnf.solve(std::span<const Lit>(assumps.data(), assumps.size()));
        c.expect(m.has_value() && bv_value(*m, sum) == va + vb, "bv_add wrong");
        if (!m) break;
      }
  }

  // 9. assumption-driven lexicographic minimization
  {
    CnfInstance cnf;
    BitVec v = bv_new(cnf, 5);
    std::vector<Lit> options{bv_eq_const(cnf, v, 21), bv_eq_const(cnf, v, 9),
                             bv_eq_const(cnf, v, 30)};
    cnf.add_clause(std::span<const Lit>(options.data(), options.size()));
    auto min = bv_minimize(cnf, v);
    c.expect(min.has_value() && min->value == 9, "bv_minimize missed the minimum");

    CnfInstance bad;
    BitVec u = bv_new(bad, 3);
    bad.add_clause({bv_eq_const(bad, u, 2)});
    bad.add_clause({~bv_eq_const(bad, u, 2)});
    c.expect(!bv_minimize(bad, u).has_value(),
             "bv_minimize invented a value for an unsatisfiable vector");
  }

  double t = secs_since(t0);
  c.expect(t < 120.0, "suite over the 120s budget");
  return fmt_secs(t);
}

std::string check_keypad_oracle(Check& c) {
  auto t0 = Clock::now();
  for (const std::string& code : kSampleCodes) {
    std::string plan = num_pad_plan(code);
    c.expect(trans_plan_len(2, plan) == testsupport::bfs_system(code, 2),
             "pipeline length differs from search on " + code);
  }
  c.expect(complexity_sum(kSampleCodes, 2) == 126384, "shallow complexity sum wrong");

  std::mt19937_64 rng(99);
  const char syms[] = {'<', '^', 'v', '>', 'A'};
  for (int i = 0; i < 500; ++i) {
    std::string plan;
    int len = static_cast<int>(rng() % 41);
    for (int j = 0; j < len; ++j) plan += syms[rng() % 5];
    c.expect(trans_plan_len(0, plan) == static_cast<int64_t>(plan.size()),
             "zero-layer translation is not the identity");
  }
  return fmt_secs(secs_since(t0));
}

void run_long_adder_repair(int& failures) {
  const char* flag = std::getenv("AOC_ACCEPT_LONG");
  if (flag == nullptr || std::strcmp(flag, "1") != 0) {
    std::cout << "[SKIP] criterion 6 full scale: 45-bit adder, 4 pairs "
                 "(set AOC_ACCEPT_LONG=1 to run)"
              << std::endl;
    return;
  }
  Check c;
  std::string timing;
  try {
    GenResult gen = gen_instance(45, 4, 1);
    Circuit circuit = parse_circuit(gen.text);
    auto t0 = Clock::now();
    auto found = find_swaps_sat(circuit, 4);
    double t = secs_since(t0);
    timing = fmt_secs(t);
    c.expect(found.has_value() && *found == gen.swapped,
             "full-scale repair wrong or missing");
    if (t >= 1800.0) timing += ", over the 30min target";
  } catch (const std::exception& e) {
    c.expect(false, std::string("unexpected exception: ") + e.what());
  }
  std::cout << (c.ok ? "[PASS]" : "[FAIL]")
            << " criterion 6 full scale: 45-bit adder, 4 pairs";
  if (!timing.empty()) std::cout << " (" << timing << ")";
  if (!c.ok) std::cout << " -- " << c.reason;
  std::cout << std::endl;
  if (!c.ok) ++failures;
}

}  // namespace

int main() {
  int failures = 0;
  run_check(1, "device quine reversal, both engines", check_quine_reversal, failures);
  run_check(2, "25-layer keypad complexity sum", check_deep_keypad, failures);
  run_check(3, "swap search-space size at 302 gates", check_swap_space, failures);
  run_check(4, "maze tiling vs. via-point and enumeration oracles",
            check_maze_tiling, failures);
  run_check(5, "planted-clique recovery, solver vs. branch-and-bound",
            check_planted_cliques, failures);
  run_check(6, "adder repair round trip with structural superset",
            check_adder_repair, failures);
  run_long_adder_repair(failures);
  run_check(7, "solver, encoder, and bit-vector faithfulness",
            check_solver_and_encoders, failures);
  run_check(8, "keypad pipeline vs. composed-system search", check_keypad_oracle,
            failures);
  return failures == 0 ? 0 : 1;
}
