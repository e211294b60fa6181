#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seifert_lspace {

enum class ErrorCode {
  ZeroDenominator,
  Parse,
  UnsupportedFiberCount,
  DegenerateEuler,
  DegenerateH1,
  InvalidSeiferter,
  PreconditionFailed,
  InvalidParameters,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::UnsupportedFiberCount: return "UnsupportedFiberCount";
    case ErrorCode::DegenerateEuler: return "DegenerateEuler";
    case ErrorCode::DegenerateH1: return "DegenerateH1";
    case ErrorCode::InvalidSeiferter: return "InvalidSeiferter";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
  }
  return "Unknown";
}

/// Base exception for every library failure. The code is stable and is what
/// the CLI reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::Parse, "at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace seifert_lspace
