#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latcon {

enum class Errc {
  CycleDetected,
  NotTransitivelyReduced,
  MeetUndefined,
  JoinUndefined,
  NoBoundsError,
  InvalidParameter,
  UnknownLabel,
  DuplicateLabel,
  NotComparable,
  SizeLimitExceeded,
  NotPrime,
  DimensionMismatch,
  AmbientMismatch,
  NotASublattice,
  EmptyGeneratorSet,
  IndexOutOfRange,
  NotAnAtom,
  UnboundedReplacement,
  TooSmall,
  InvalidParameters,
  BudgetExceeded,
  NotEnoughFound,
  ParseError,
  FormatError,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::NotTransitivelyReduced: return "NotTransitivelyReduced";
    case Errc::MeetUndefined: return "MeetUndefined";
    case Errc::JoinUndefined: return "JoinUndefined";
    case Errc::NoBoundsError: return "NoBoundsError";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::NotComparable: return "NotComparable";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::NotPrime: return "NotPrime";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::NotASublattice: return "NotASublattice";
    case Errc::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotAnAtom: return "NotAnAtom";
    case Errc::UnboundedReplacement: return "UnboundedReplacement";
    case Errc::TooSmall: return "TooSmall";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotEnoughFound: return "NotEnoughFound";
    case Errc::ParseError: return "ParseError";
    case Errc::FormatError: return "FormatError";
  }
  return "Unknown";
}

/// Domain error raised by every latcon module. `code()` names the failure
/// kind; what() is "<Name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace latcon
