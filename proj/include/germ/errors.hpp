#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace germ {

enum class ErrorCode {
  OrderMismatch,
  DegreeOverflow,
  NotAGerm,
  NotDivisible,
  ZeroDivisor,
  SyntaxError,
  DivisionByZeroLiteral,
  ThirdComponentNotY,
  InvariantViolation,
  NotLegendrianAtJetOrder,
  ConditionBViolated,
  ConditionCViolated,
  KernelFieldDegenerate,
  KernelNotX,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::NotAGerm: return "NotAGerm";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DivisionByZeroLiteral: return "DivisionByZeroLiteral";
    case ErrorCode::ThirdComponentNotY: return "ThirdComponentNotY";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NotLegendrianAtJetOrder: return "NotLegendrianAtJetOrder";
    case ErrorCode::ConditionBViolated: return "ConditionBViolated";
    case ErrorCode::ConditionCViolated: return "ConditionCViolated";
    case ErrorCode::KernelFieldDegenerate: return "KernelFieldDegenerate";
    case ErrorCode::KernelNotX: return "KernelNotX";
  }
  return "Unknown";
}

/// Domain error raised by the jet engine and everything built on it.
class GermError : public std::runtime_error {
 public:
  GermError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

/// Expression parse failure; `offset` is the byte position in the source text.
class ParseError : public GermError {
 public:
  ParseError(ErrorCode code, std::size_t offset, const std::string& what)
      : GermError(code, what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace germ
