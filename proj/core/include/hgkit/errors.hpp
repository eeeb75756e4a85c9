#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hgkit {

/// An argument violates an operation's hypothesis (e.g. N <= 2a+1).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search was refused or aborted because it would exceed a configured
/// limit (vertex count, node budget or wall-clock budget).
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed .hg input. `line()` is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hgkit
