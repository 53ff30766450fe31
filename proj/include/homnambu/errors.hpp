#pragma once

#include <stdexcept>
#include <string>

namespace homnambu {

/// Shape mismatch between operands (vector lengths, matrix sizes, arities).
class DimensionError : public std::runtime_error {
public:
  explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Syntax or semantic error in a textual input (algebra or cochain file).
class FormatError : public std::runtime_error {
public:
  FormatError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// A mathematical precondition of an operation does not hold for the input.
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace homnambu
