#include "aoc/days/ccrev.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "aoc/errors.hpp"
#include "aoc/sat/bitvec.hpp"

namespace aoc::days {

namespace {

constexpr int kAdv = 0, kBxl = 1, kBst = 2, kJnz = 3, kBxc = 4, kOut = 5, kBdv = 6,
              kCdv = 7;

uint64_t parse_u64(const std::string& s, int line_no) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw ParseError("missing number", line_no);
  uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data() + b, s.data() + e + 1, v);
  if (ec != std::errc() || p != s.data() + e + 1)
    throw ParseError("bad number '" + s + "'", line_no);
  return v;
}

struct Exec {
  uint64_t a, b, c;
  std::vector<int> out;
};

uint64_t combo_value(const Exec& m, int operand) {
  switch (operand) {
    case 0:
    case 1:
    case 2:
    case 3: return static_cast<uint64_t>(operand);
    case 4: return m.a;
    case 5: return m.b;
    case 6: return m.c;
    default: throw ExecError("reserved combo operand 7");
  }
}

uint64_t shift_down(uint64_t v, uint64_t amount) {
  return amount >= 64 ? 0 : v >> amount;
}

void exec_to_halt(Exec& m, const std::vector<int>& program, int64_t max_steps) {
  size_t ip = 0;
  int64_t steps = 0;
  while (ip + 1 < program.size()) {
    if (++steps > max_steps) throw ExecError("step budget exceeded");
    int op = program[ip];
    int arg = program[ip + 1];
    ip += 2;
    switch (op) {
      case kAdv: m.a = shift_down(m.a, combo_value(m, arg)); break;
      case kBxl: m.b ^= static_cast<uint64_t>(arg); break;
      case kBst: m.b = combo_value(m, arg) & 7; break;
      case kJnz:
        if (m.a != 0) {
          if (arg % 2 != 0) throw ExecError("jump to odd address");
          ip = static_cast<size_t>(arg);
        }
        break;
      case kBxc: m.b ^= m.c; break;
      case kOut: m.out.push_back(static_cast<int>(combo_value(m, arg) & 7)); break;
      case kBdv: m.b = shift_down(m.a, combo_value(m, arg)); break;
      case kCdv: m.c = shift_down(m.a, combo_value(m, arg)); break;
      default: throw ExecError("invalid opcode");
    }
  }
}

}  // namespace

Device parse_device(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Device dev;
  bool have[3] = {false, false, false};
  bool have_program = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line.rfind("Register ", 0) == 0) {
      if (line.size() < 11 || line[10] != ':')
        throw ParseError("malformed register line", line_no);
      char which = line[9];
      uint64_t value = parse_u64(line.substr(11), line_no);
      switch (which) {
        case 'A': dev.a = value; have[0] = true; break;
        case 'B': dev.b = value; have[1] = true; break;
        case 'C': dev.c = value; have[2] = true; break;
        default: throw ParseError("unknown register", line_no);
      }
    } else if (line.rfind("Program:", 0) == 0) {
      std::string rest = line.substr(8);
      std::istringstream codes(rest);
      std::string tok;
      while (std::getline(codes, tok, ',')) {
        uint64_t code = parse_u64(tok, line_no);
        if (code > 7) throw ParseError("program code out of range", line_no);
        dev.program.push_back(static_cast<int>(code));
      }
      if (dev.program.empty()) throw ParseError("empty program", line_no);
      have_program = true;
    } else {
      throw ParseError("unrecognized line", line_no);
    }
  }
  if (!have[0] || !have[1] || !have[2]) throw ParseError("missing register", line_no);
  if (!have_program) throw ParseError("missing program", line_no);
  return dev;
}

std::vector<int> run(const std::vector<int>& program, uint64_t a, uint64_t b, uint64_t c,
                     int64_t max_steps) {
  for (int code : program)
    if (code < 0 || code > 7) throw std::invalid_argument("program code out of range");
  Exec m{a, b, c, {}};
  exec_to_halt(m, program, max_steps);
  return m.out;
}

void check_loop_shape(const std::vector<int>& program) {
  if (program.size() < 4 || program.size() % 2 != 0)
    throw ShapeError("program must be a non-empty even-length code list");
  size_t n = program.size();
  if (program[n - 2] != kJnz || program[n - 1] != 0)
    throw ShapeError("program must end with a loop-back jump to 0");
  int outs = 0, advs = 0;
  bool b_defined = false, c_defined = false;
  for (size_t ip = 0; ip + 1 < n; ip += 2) {
    int op = program[ip];
    int arg = program[ip + 1];
    bool is_last = ip == n - 2;
    if (op == kJnz && !is_last) throw ShapeError("only the final jump is supported");
    bool reads_b = op == kBxl || op == kBxc ||
                   ((op == kAdv || op == kBdv || op == kCdv || op == kBst || op == kOut) &&
                    arg == 5);
    bool reads_c = op == kBxc ||
                   ((op == kAdv || op == kBdv || op == kCdv || op == kBst || op == kOut) &&
                    arg == 6);
    if (reads_b && !b_defined) throw ShapeError("B read before the pass writes it");
    if (reads_c && !c_defined) throw ShapeError("C read before the pass writes it");
    if ((op == kAdv || op == kBdv || op == kCdv || op == kBst || op == kOut) && arg == 7)
      throw ShapeError("reserved combo operand 7");
    switch (op) {
      case kAdv:
        if (arg != 3) throw ShapeError("A must shift by exactly 3 bits per pass");
        ++advs;
        break;
      case kBxl:
      case kBst:
      case kBxc:
      case kBdv: b_defined = true; break;
      case kCdv: c_defined = true; break;
      case kOut: ++outs; break;
      default: break;
    }
  }
  if (outs != 1) throw ShapeError("exactly one output per pass is required");
  if (advs != 1) throw ShapeError("exactly one A shift per pass is required");
}

namespace {

// One pass of the loop body (everything before the trailing jump) starting
// from register A = a with B = C = 0; the shape check guarantees the zeros
// are never observed.  Returns (emitted code, A after the pass).
std::pair<int, uint64_t> run_body_once(const std::vector<int>& program, uint64_t a) {
  Exec m{a, 0, 0, {}};
  std::vector<int> body(program.begin(), program.end() - 2);
  exec_to_halt(m, body, 1'000);
  return {m.out.at(0), m.a};
}

bool dfs_digits(const std::vector<int>& program, std::span<const int> target, int idx,
                uint64_t suffix, uint64_t& answer) {
  if (idx < 0) {
    answer = suffix;
    return true;
  }
  for (uint64_t digit = 0; digit < 8; ++digit) {
    uint64_t a = suffix * 8 + digit;
    if (idx >= 1 && a == 0) continue;  // pass idx is re-entered, so A was nonzero
    auto [code, next_a] = run_body_once(program, a);
    (void)next_a;
    if (code != target[static_cast<size_t>(idx)]) continue;
    if (dfs_digits(program, target, idx - 1, a, answer)) return true;
  }
  return false;
}

}  // namespace

std::optional<uint64_t> reverse_min_a_dfs(const std::vector<int>& program,
                                          std::span<const int> target) {
  check_loop_shape(program);
  for (int code : target)
    if (code < 0 || code > 7) throw std::invalid_argument("target code out of range");
  if (target.empty()) return std::nullopt;  // one code is emitted per pass
  if (target.size() > 21) throw std::invalid_argument("target exceeds 64-bit A range");
  uint64_t answer = 0;
  if (!dfs_digits(program, target, static_cast<int>(target.size()) - 1, 0, answer))
    return std::nullopt;
  std::vector<int> check = run(program, answer);
  if (!std::equal(check.begin(), check.end(), target.begin(), target.end()))
    throw std::logic_error("digit search produced a non-reproducing value");
  return answer;
}

std::optional<uint64_t> reverse_min_a_dfs(const std::vector<int>& program) {
  return reverse_min_a_dfs(program, std::span<const int>(program.data(), program.size()));
}

namespace {

using sat::BitVec;
using sat::CnfInstance;
using sat::Lit;

// Symbolic registers during one unrolled pass.  B and C start empty; the
// shape check proved they are written before any read.
struct SymState {
  BitVec a, b, c;
};

BitVec combo_vec(CnfInstance& cnf, const SymState& s, int operand) {
  switch (operand) {
    case 0:
    case 1:
    case 2:
    case 3: return sat::bv_const(cnf, static_cast<uint64_t>(operand), 3);
    case 4: return s.a;
    case 5: return s.b;
    case 6: return s.c;
    default: throw ShapeError("reserved combo operand 7");
  }
}

// low 3 bits, widened when the source is narrower
BitVec low3(CnfInstance& cnf, const BitVec& v) {
  return sat::bv_zext(cnf, sat::bv_take(v, std::min(3, v.width())), 3);
}

BitVec shrunk(CnfInstance& cnf, const BitVec& v, int by) {
  BitVec rest = sat::bv_drop(v, std::min(by, v.width()));
  if (rest.width() == 0) return sat::bv_const(cnf, 0, 1);
  return rest;
}

BitVec sym_shift(CnfInstance& cnf, const SymState& s, int operand) {
  BitVec amount = combo_vec(cnf, s, operand);
  if (amount.width() > 6) throw ShapeError("shift amount operand too wide to encode");
  return sat::bv_shr_var(cnf, s.a, amount);
}

BitVec xor_equalized(CnfInstance& cnf, const BitVec& x, const BitVec& y) {
  int w = std::max(x.width(), y.width());
  return sat::bv_xor(cnf, sat::bv_zext(cnf, x, w), sat::bv_zext(cnf, y, w));
}

}  // namespace

std::optional<uint64_t> reverse_min_a_sat(const std::vector<int>& program,
                                          std::span<const int> target,
                                          const SatReverseOptions& opts) {
  check_loop_shape(program);
  for (int code : target)
    if (code < 0 || code > 7) throw std::invalid_argument("target code out of range");
  if (target.empty()) return std::nullopt;
  int width = opts.width != 0 ? opts.width : 3 * static_cast<int>(target.size());
  if (width < 3 || width > 63) throw std::invalid_argument("unusable A width");

  CnfInstance cnf;
  BitVec a0 = sat::bv_new(cnf, width);
  BitVec cur = a0;
  for (size_t i = 0; i < target.size(); ++i) {
    SymState s{cur, {}, {}};
    for (size_t ip = 0; ip + 3 < program.size(); ip += 2) {  // body, sans jump
      int op = program[ip];
      int arg = program[ip + 1];
      switch (op) {
        case kAdv: s.a = shrunk(cnf, s.a, 3); break;
        case kBxl: {
          BitVec b = sat::bv_zext(cnf, s.b, std::max(3, s.b.width()));
          s.b = sat::bv_xor(cnf, b, static_cast<uint64_t>(arg));
          break;
        }
        case kBst: s.b = low3(cnf, combo_vec(cnf, s, arg)); break;
        case kBxc: s.b = xor_equalized(cnf, s.b, s.c); break;
        case kOut: {
          BitVec emitted = low3(cnf, combo_vec(cnf, s, arg));
          int code = target[i];
          for (int bit = 0; bit < 3; ++bit)
            cnf.add_clause({((code >> bit) & 1) ? emitted[bit] : ~emitted[bit]});
          break;
        }
        case kBdv: s.b = sym_shift(cnf, s, arg); break;
        case kCdv: s.c = sym_shift(cnf, s, arg); break;
        default: throw ShapeError("unsupported opcode in loop body");
      }
    }
    cur = s.a;
    if (i + 1 < target.size()) {
      // the loop is taken again, so A here must be nonzero
      cnf.add_clause(std::span<const Lit>(cur.bits.data(), cur.bits.size()));
    } else {
      cnf.add_clause({sat::bv_eq_const(cnf, cur, 0)});
    }
  }
  if (opts.on_encoded) opts.on_encoded(cnf);

  auto best = sat::bv_minimize(cnf, a0);
  if (!best) return std::nullopt;
  std::vector<int> check = run(program, best->value);
  if (!std::equal(check.begin(), check.end(), target.begin(), target.end()))
    throw std::logic_error("encoded search produced a non-reproducing value");
  return best->value;
}

std::optional<uint64_t> reverse_min_a_sat(const std::vector<int>& program,
                                          const SatReverseOptions& opts) {
  return reverse_min_a_sat(program, std::span<const int>(program.data(), program.size()),
                           opts);
}

}  // namespace aoc::days
