#include "aoc/sat/bitvec.hpp"

#include <stdexcept>

#include "aoc/sat/encode.hpp"

namespace aoc::sat {

namespace {

void require_width(const BitVec& x, const char* what) {
  if (x.width() == 0) throw std::invalid_argument(std::string(what) + ": empty bit-vector");
}

void require_same_width(const BitVec& a, const BitVec& b, const char* what) {
  if (a.width() != b.width())
    throw std::invalid_argument(std::string(what) + ": width mismatch");
}

void require_fits(uint64_t value, int width, const char* what) {
  if (width < 64 && (value >> width) != 0)
    throw std::invalid_argument(std::string(what) + ": constant does not fit width");
}

// out <-> (s ? t : f), with a fresh output variable unless the branches agree.
Lit mux(CnfInstance& cnf, Lit s, Lit t, Lit f) {
  if (t == f) return t;
  Lit out = Lit::pos(cnf.new_var());
  cnf.add_clause({~s, ~t, out});
  cnf.add_clause({~s, t, ~out});
  cnf.add_clause({s, ~f, out});
  cnf.add_clause({s, f, ~out});
  return out;
}

}  // namespace

BitVec bv_new(CnfInstance& cnf, int width) {
  if (width <= 0) throw std::invalid_argument("bv_new: width must be positive");
  BitVec x;
  for (int i = 0; i < width; ++i) x.bits.push_back(Lit::pos(cnf.new_var()));
  return x;
}

BitVec bv_const(CnfInstance& cnf, uint64_t value, int width) {
  if (width <= 0) throw std::invalid_argument("bv_const: width must be positive");
  require_fits(value, width, "bv_const");
  Lit t = cnf.true_lit();
  BitVec x;
  for (int i = 0; i < width; ++i) x.bits.push_back(((value >> i) & 1) ? t : ~t);
  return x;
}

BitVec bv_take(const BitVec& x, int n) {
  if (n < 0 || n > x.width()) throw std::invalid_argument("bv_take: bad count");
  return BitVec{{x.bits.begin(), x.bits.begin() + n}};
}

BitVec bv_drop(const BitVec& x, int n) {
  if (n < 0 || n > x.width()) throw std::invalid_argument("bv_drop: bad count");
  return BitVec{{x.bits.begin() + n, x.bits.end()}};
}

BitVec bv_zext(CnfInstance& cnf, const BitVec& x, int width) {
  if (width < x.width()) throw std::invalid_argument("bv_zext: cannot shrink");
  BitVec out = x;
  Lit zero = ~cnf.true_lit();
  while (out.width() < width) out.bits.push_back(zero);
  return out;
}

BitVec bv_xor(CnfInstance& cnf, const BitVec& a, const BitVec& b) {
  require_same_width(a, b, "bv_xor");
  Lit t = cnf.true_lit();
  BitVec out;
  for (int i = 0; i < a.width(); ++i) {
    Lit x = a[i], y = b[i];
    // constants fold to a (possibly negated) copy of the other operand
    if (y == ~t) out.bits.push_back(x);
    else if (y == t) out.bits.push_back(~x);
    else if (x == ~t) out.bits.push_back(y);
    else if (x == t) out.bits.push_back(~y);
    else out.bits.push_back(gate_xor(cnf, x, y));
  }
  return out;
}

BitVec bv_xor(CnfInstance& cnf, const BitVec& a, uint64_t b) {
  require_width(a, "bv_xor");
  require_fits(b, a.width(), "bv_xor");
  (void)cnf;
  BitVec out;
  for (int i = 0; i < a.width(); ++i)
    out.bits.push_back(((b >> i) & 1) ? ~a[i] : a[i]);
  return out;
}

BitVec bv_shr_var(CnfInstance& cnf, const BitVec& x, const BitVec& sh) {
  require_width(x, "bv_shr_var");
  require_width(sh, "bv_shr_var");
  if (sh.width() > 6) throw std::invalid_argument("bv_shr_var: shift wider than 6 bits");
  Lit zero = ~cnf.true_lit();
  BitVec cur = x;
  for (int j = 0; j < sh.width(); ++j) {
    const int step = 1 << j;
    BitVec next;
    for (int i = 0; i < cur.width(); ++i) {
      Lit shifted = (step >= cur.width() - i) ? zero : cur[i + step];
      next.bits.push_back(mux(cnf, sh[j], shifted, cur[i]));
    }
    cur = std::move(next);
  }
  return cur;
}

Lit bv_eq(CnfInstance& cnf, const BitVec& a, const BitVec& b) {
  require_width(a, "bv_eq");
  require_same_width(a, b, "bv_eq");
  Lit acc = gate_eq(cnf, a[0], b[0]);
  for (int i = 1; i < a.width(); ++i) acc = gate_and(cnf, acc, gate_eq(cnf, a[i], b[i]));
  return acc;
}

Lit bv_eq_const(CnfInstance& cnf, const BitVec& x, uint64_t value) {
  require_width(x, "bv_eq_const");
  require_fits(value, x.width(), "bv_eq_const");
  Lit acc = ((value >> 0) & 1) ? x[0] : ~x[0];
  for (int i = 1; i < x.width(); ++i) {
    Lit bit = ((value >> i) & 1) ? x[i] : ~x[i];
    acc = gate_and(cnf, acc, bit);
  }
  return acc;
}

BitVec bv_add(CnfInstance& cnf, const BitVec& a, const BitVec& b) {
  require_width(a, "bv_add");
  require_same_width(a, b, "bv_add");
  const int w = a.width();
  BitVec out;
  // bit 0: half adder
  out.bits.push_back(gate_xor(cnf, a[0], b[0]));
  Lit carry = gate_and(cnf, a[0], b[0]);
  for (int i = 1; i < w; ++i) {
    Lit axb = gate_xor(cnf, a[i], b[i]);
    out.bits.push_back(gate_xor(cnf, axb, carry));
    // majority(a, b, carry) as the next carry
    Lit next = Lit::pos(cnf.new_var());
    cnf.add_clause({~a[i], ~b[i], next});
    cnf.add_clause({~a[i], ~carry, next});
    cnf.add_clause({~b[i], ~carry, next});
    cnf.add_clause({a[i], b[i], ~next});
    cnf.add_clause({a[i], carry, ~next});
    cnf.add_clause({b[i], carry, ~next});
    carry = next;
  }
  out.bits.push_back(carry);  // exact: top bit is the final carry
  return out;
}

uint64_t bv_value(const Model& m, const BitVec& x) {
  if (x.width() > 64) throw std::invalid_argument("bv_value: wider than 64 bits");
  uint64_t v = 0;
  for (int i = 0; i < x.width(); ++i)
    if (m.value(x[i])) v |= uint64_t{1} << i;
  return v;
}

std::optional<BvMinimum> bv_minimize(CnfInstance& cnf, const BitVec& x,
                                     std::span<const Lit> assumptions) {
  require_width(x, "bv_minimize");
  if (x.width() > 64) throw std::invalid_argument("bv_minimize: wider than 64 bits");
  std::vector<Lit> assume(assumptions.begin(), assumptions.end());
  const size_t base = assume.size();
  if (!cnf.solve(std::span<const Lit>(assume.data(), assume.size())).has_value())
    return std::nullopt;

  BvMinimum result;
  for (int i = x.width() - 1; i >= 0; --i) {
    assume.push_back(~x[i]);
    bool can_be_zero =
        cnf.solve(std::span<const Lit>(assume.data(), assume.size())).has_value();
    if (!can_be_zero) {
      assume.back() = x[i];
      result.value |= uint64_t{1} << i;
    }
    result.forced.emplace_back(i, !can_be_zero);
  }
  // replay the fully pinned assumption set once to obtain a witness model
  auto final_model = cnf.solve(std::span<const Lit>(assume.data(), assume.size()));
  if (!final_model.has_value() || bv_value(*final_model, x) != result.value)
    throw std::logic_error("bv_minimize: inconsistent final solve");
  result.model = std::move(*final_model);
  assume.resize(base);
  return result;
}

}  // namespace aoc::sat
