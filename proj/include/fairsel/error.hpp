#pragma once

#include <stdexcept>
#include <string>

namespace fairsel {

enum class ErrorCode {
  ParseError,
  DuplicateId,
  DanglingReference,
  MissingCategory,
  OutOfRangeWeight,
  UnknownCountry,
  MissingState,
  EmptyPool,
  EmptyAuthorList,
  UnknownVenue,
  PoolTooSmall,
  EmptySelection,
  EmptyBaseline,
  ZeroBaselineFeature,
  ZeroBaselineUtility,
  DegenerateDenominator,
  InvalidArgument,
  IoError,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::MissingCategory: return "MissingCategory";
    case ErrorCode::OutOfRangeWeight: return "OutOfRangeWeight";
    case ErrorCode::UnknownCountry: return "UnknownCountry";
    case ErrorCode::MissingState: return "MissingState";
    case ErrorCode::EmptyPool: return "EmptyPool";
    case ErrorCode::EmptyAuthorList: return "EmptyAuthorList";
    case ErrorCode::UnknownVenue: return "UnknownVenue";
    case ErrorCode::PoolTooSmall: return "PoolTooSmall";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::EmptyBaseline: return "EmptyBaseline";
    case ErrorCode::ZeroBaselineFeature: return "ZeroBaselineFeature";
    case ErrorCode::ZeroBaselineUtility: return "ZeroBaselineUtility";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fairsel
