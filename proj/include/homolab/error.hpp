#ifndef HOMOLAB_ERROR_HPP
#define HOMOLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace homolab {

enum class ErrorCode {
  InvalidCharacteristic,
  CharacteristicMismatch,
  DimensionMismatch,
  NotArtinian,
  NonHomogeneousIdeal,
  LinearFormsPresent,
  ZeroModule,
  CodimNotThree,
  Precondition,
  ParseError,
  ValidationError,
  ResourceLimit,
  CacheCorrupt,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidCharacteristic: return "InvalidCharacteristic";
    case ErrorCode::CharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotArtinian: return "NotArtinian";
    case ErrorCode::NonHomogeneousIdeal: return "NonHomogeneousIdeal";
    case ErrorCode::LinearFormsPresent: return "LinearFormsPresent";
    case ErrorCode::ZeroModule: return "ZeroModule";
    case ErrorCode::CodimNotThree: return "CodimNotThree";
    case ErrorCode::Precondition: return "PreconditionError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
  }
  return "Unknown";
}

/// All library failures are reported through this type; `code()` names the
/// failure class, the message carries the context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures keep their source position (1-based).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace homolab

#endif  // HOMOLAB_ERROR_HPP
