#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cft {

enum class ErrorKind {
  InvalidArgument,
  NonUniformGrid,
  TooShort,
  OffGridStart,
  GridTooShort,
  MisalignedOrigin,
  ParseError,
  IoError,
  SizeTooLarge,
  MissingPair,
  OracleMismatch,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonUniformGrid: return "NonUniformGrid";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::OffGridStart: return "OffGridStart";
    case ErrorKind::GridTooShort: return "GridTooShort";
    case ErrorKind::MisalignedOrigin: return "MisalignedOrigin";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
    case ErrorKind::MissingPair: return "MissingPair";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
/// what() is formatted as "<Kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cft
