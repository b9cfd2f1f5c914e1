#pragma once

#include <stdexcept>
#include <string>

namespace equitile {

enum class ErrorKind {
  InvalidPolygon,
  NoSolution,
  InfinitelyMany,
  InvalidParams,
  InfeasibleConstraint,
  InfeasibleShift,
  ExhaustedRetries,
  DuplicateWidth,
  FormatError,
  IoError,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPolygon: return "InvalidPolygon";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::InfinitelyMany: return "InfinitelyMany";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InfeasibleConstraint: return "InfeasibleConstraint";
    case ErrorKind::InfeasibleShift: return "InfeasibleShift";
    case ErrorKind::ExhaustedRetries: return "ExhaustedRetries";
    case ErrorKind::DuplicateWidth: return "DuplicateWidth";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace equitile
