#pragma once

#include <string>

#include "aoc/sat/solver.hpp"

namespace aoc::sat {

// Serializes the stored problem clauses: "p cnf V C" header, one clause per
// line, each terminated by 0. Comments are not emitted.
std::string write_dimacs(const CnfInstance& inst);

// Parses DIMACS CNF text: optional 'c' comment lines, one 'p cnf V C' header,
// then whitespace-separated signed literals with 0 ending each clause.
// Malformed input raises aoc::ParseError carrying the offending line.
CnfInstance read_dimacs(const std::string& text);

}  // namespace aoc::sat
