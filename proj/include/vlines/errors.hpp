#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vlines {

enum class ErrorCode {
  InvalidArgument,
  FieldMismatch,
  Parse,
  DegenerateLine,
  DegenerateSpan,
  NotALine,
  BasePoint,
  ContractedLine,
  ProjectionNotIsomorphic,
  NotAnIsomorphism,
  EmptyJumpingSet,
  WrongDimension,
  Antisymmetry,
  Internal,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Error(ErrorCode code, const std::string& what, std::vector<int> witness)
      : std::runtime_error(what), code_(code), witness_(std::move(witness)) {}
  ErrorCode code() const noexcept { return code_; }
  /// Indices locating the failure (matrix entries, Pfaffian rows), if any.
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<int> witness_;
};

// Column is 1-based; line is 1 for single-line inputs.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorCode::Parse, what + " (line " + std::to_string(line) +
                                    ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace vlines
