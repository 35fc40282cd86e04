#pragma once

#include <stdexcept>
#include <string>

namespace aoc {

// Input text could not be parsed. Carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  explicit ParseError(const std::string& msg) : std::runtime_error(msg), line_(0) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace aoc
