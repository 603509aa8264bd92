#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hlrc {

enum class ErrorCode {
  UnsupportedOrder,
  DivisionByZero,
  RankDeficient,
  EntryOutOfRange,
  IndexOutOfRange,
  EmptySet,
  FullEntropyShorten,
  EnumerationCapExceeded,
  SearchCapExceeded,
  MaterializationCapExceeded,
  InvalidArgs,
  UnclassifiedHyperplane,
  TypeNotRealizable,
  InfeasiblePadding,
  InvalidFamilies,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (and tests) can dispatch on the kind rather than on message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::FullEntropyShorten: return "FullEntropyShorten";
    case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorCode::SearchCapExceeded: return "SearchCapExceeded";
    case ErrorCode::MaterializationCapExceeded: return "MaterializationCapExceeded";
    case ErrorCode::InvalidArgs: return "InvalidArgs";
    case ErrorCode::UnclassifiedHyperplane: return "UnclassifiedHyperplane";
    case ErrorCode::TypeNotRealizable: return "TypeNotRealizable";
    case ErrorCode::InfeasiblePadding: return "InfeasiblePadding";
    case ErrorCode::InvalidFamilies: return "InvalidFamilies";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hlrc
