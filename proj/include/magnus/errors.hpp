#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace magnus {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is the byte offset into the parsed string.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& what, std::optional<std::size_t> offset = std::nullopt)
      : Error(offset ? "unknown generator at offset " + std::to_string(*offset) + ": " + what
                     : "unknown generator: " + what),
        offset_(offset) {}
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  std::optional<std::size_t> offset_;
};

class EmptyRelator : public Error {
 public:
  EmptyRelator() : Error("relator reduces to the empty word") {}
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// A configured budget (depth, word length, subscript span) was exceeded.
/// Never conflated with a negative answer.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

/// A built-in cross-check disagreed. Indicates a bug, never a valid outcome.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace magnus
