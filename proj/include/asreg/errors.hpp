#pragma once

#include <stdexcept>
#include <string>

namespace asreg {

enum class ErrorKind {
  Singular,
  NotASRegular,
  UnsupportedField,
  InternalInconsistency,
  IrrationalParameter,
  ZeroRoot,
  AlphabetMismatch,
  DegreeBoundTooSmall,
  NotGraded,
  HypothesisNotMet,
  NonCentralCodeterminant,
  SizeMismatch,
  ParseError,
  FieldMismatch,
  DivisionByZero,
  InvalidArgument,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(ErrorKind::ParseError, msg + " at line " + std::to_string(line) +
                                         ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace asreg
