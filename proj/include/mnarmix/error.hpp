#pragma once

#include <stdexcept>
#include <string>

namespace mnarmix {

enum class ErrorKind {
  ConstantOrEmptyColumn,
  EmptyColumn,
  DegenerateWeights,
  InvalidConfig,
  InvalidData,
  FitFailed,
  NotTabulated,
  LengthMismatch,
  ParseError,
  SchemaMismatch,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (and the CLI
/// exit-code mapping) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ConstantOrEmptyColumn: return "ConstantOrEmptyColumn";
    case ErrorKind::EmptyColumn: return "EmptyColumn";
    case ErrorKind::DegenerateWeights: return "DegenerateWeights";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::InvalidData: return "InvalidData";
    case ErrorKind::FitFailed: return "FitFailed";
    case ErrorKind::NotTabulated: return "NotTabulated";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace mnarmix
