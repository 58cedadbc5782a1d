#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eraskit {

/// Expression syntax error. `offset` is the byte position in the input,
/// `expected` describes the token class the parser was looking for.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& detail)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + detail),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Unreadable path, malformed corpus record, and similar input failures.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A probability query with no defined value (empty document, or a
/// conditional whose denominator erases everything).
class UndefinedProbability : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eraskit
