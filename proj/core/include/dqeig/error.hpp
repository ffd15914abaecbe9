#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dqeig {

enum class ErrorCode {
  ZeroQuaternion,
  DivisionUndefined,
  ShapeMismatch,
  NotHermitian,
  DegenerateOffdiag,
  IndexOutOfRange,
  RepeatedDiagonal,
  InvalidMultiplicities,
  PairingFailure,
  DegenerateSpectrum,
  ZeroNorm,
  InvalidSparsity,
  InvalidConfig,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroQuaternion: return "ZeroQuaternion";
    case ErrorCode::DivisionUndefined: return "DivisionUndefined";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::DegenerateOffdiag: return "DegenerateOffdiag";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RepeatedDiagonal: return "RepeatedDiagonal";
    case ErrorCode::InvalidMultiplicities: return "InvalidMultiplicities";
    case ErrorCode::PairingFailure: return "PairingFailure";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::ZeroNorm: return "ZeroNorm";
    case ErrorCode::InvalidSparsity: return "InvalidSparsity";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dqeig
