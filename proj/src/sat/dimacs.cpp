#include "aoc/sat/dimacs.hpp"

#include <charconv>
#include <sstream>
#include <string_view>

#include "aoc/errors.hpp"

namespace aoc::sat {

std::string write_dimacs(const CnfInstance& inst) {
  std::ostringstream out;
  out << "p cnf " << inst.num_vars() << ' ' << inst.clause_count() << '\n';
  inst.for_each_clause([&out](std::span<const Lit> clause) {
    for (Lit l : clause) out << l.to_dimacs() << ' ';
    out << "0\n";
  });
  return out.str();
}

namespace {

struct Token {
  std::string_view text;
  int line;
};

// Splits into whitespace-separated tokens, dropping 'c' comment lines and
// remembering line numbers for diagnostics.
std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  int line = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view row(text.data() + pos, eol - pos);
    ++line;
    pos = eol + 1;
    size_t i = 0;
    while (i < row.size() && (row[i] == ' ' || row[i] == '\t' || row[i] == '\r')) ++i;
    if (i < row.size() && row[i] == 'c') continue;
    while (i < row.size()) {
      size_t start = i;
      while (i < row.size() && row[i] != ' ' && row[i] != '\t' && row[i] != '\r') ++i;
      if (i > start) tokens.push_back({row.substr(start, i - start), line});
      while (i < row.size() && (row[i] == ' ' || row[i] == '\t' || row[i] == '\r')) ++i;
    }
  }
  return tokens;
}

long long parse_int(const Token& t) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError("expected an integer, got '" + std::string(t.text) + "'", t.line);
  return value;
}

}  // namespace

CnfInstance read_dimacs(const std::string& text) {
  auto tokens = tokenize(text);
  size_t i = 0;
  if (tokens.size() < 4 || tokens[0].text != "p" || tokens[1].text != "cnf")
    throw ParseError("missing 'p cnf' header", tokens.empty() ? 1 : tokens[0].line);
  long long num_vars = parse_int(tokens[2]);
  long long num_clauses = parse_int(tokens[3]);
  if (num_vars < 0 || num_clauses < 0)
    throw ParseError("header declares negative counts", tokens[0].line);
  i = 4;

  CnfInstance inst;
  for (long long v = 0; v < num_vars; ++v) inst.new_var();

  std::vector<Lit> clause;
  long long clauses_read = 0;
  int last_line = tokens.empty() ? 1 : tokens.back().line;
  while (i < tokens.size()) {
    const Token& t = tokens[i++];
    if (t.text == "p") throw ParseError("duplicate header", t.line);
    long long v = parse_int(t);
    if (v == 0) {
      inst.add_clause(std::span<const Lit>(clause.data(), clause.size()));
      clause.clear();
      ++clauses_read;
      continue;
    }
    if (v > num_vars || v < -num_vars)
      throw ParseError("literal " + std::string(t.text) + " out of declared range", t.line);
    clause.push_back(Lit::from_dimacs(static_cast<int>(v)));
  }
  if (!clause.empty()) throw ParseError("clause not terminated by 0", last_line);
  if (clauses_read != num_clauses)
    throw ParseError("header declares " + std::to_string(num_clauses) + " clauses but " +
                         std::to_string(clauses_read) + " were read",
                     last_line);
  return inst;
}

}  // namespace aoc::sat
