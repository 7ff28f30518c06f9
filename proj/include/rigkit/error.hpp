#pragma once

#include <stdexcept>
#include <string>

namespace rigkit {

/// Base class for all rigkit errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input bytes. Carries the 1-based line number when known.
struct ParseError : Error {
  int line = 0;
  ParseError(int line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// Structurally well-formed input that violates a documented invariant
/// (out-of-range index, bad row sum, dimension mismatch, ...).
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

}  // namespace rigkit
