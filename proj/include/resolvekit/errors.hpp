#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resolvekit {

// Malformed graph data: self-loops, out-of-range endpoints, bad parameters.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A precondition of an operation does not hold (empty set, disconnected
// input, non-resolving factor, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text input that cannot be parsed. line() is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error((line == 0 ? std::string("at end of input") : "line " + std::to_string(line)) +
                           ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace resolvekit
