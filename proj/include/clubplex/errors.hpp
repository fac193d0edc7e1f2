#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clubplex {

/// Malformed input text (edge lists, DIMACS files, manifests, CSV, LP).
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A caller broke a documented precondition (vertex out of range, bad
/// configuration, mismatched series lengths, ...).
class ContractError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace clubplex
