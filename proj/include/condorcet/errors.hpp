#pragma once

#include <stdexcept>
#include <string>

namespace condorcet {

/// Bad input to a library operation (unknown alternative, wrong arity, ...).
class invalid_argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The request is well-formed but exceeds the supported problem size.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed; signals a bug rather than bad input.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed domain text.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace condorcet
