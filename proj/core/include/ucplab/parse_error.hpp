#pragma once

#include <stdexcept>
#include <string>

namespace ucplab {

// Error raised by the text readers (DIMACS, hypergraph files), carrying the
// 1-based line number of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace ucplab
