#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace colgraph {

/// Base class for all recoverable errors raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed predicate text; carries the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Malformed input file; carries the 1-based line number.
class LoadError : public Error {
 public:
  LoadError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace colgraph
