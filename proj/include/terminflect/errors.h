#pragma once

#include <stdexcept>
#include <string>

namespace terminflect {

// Malformed input text. line is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a structural invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedPosError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace terminflect
