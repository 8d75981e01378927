#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace selfref {

// Machine-readable failure kinds. The CLI prints code_name() in error envelopes.
enum class ErrorCode {
  ChainMismatch,
  RewriteBudgetExceeded,
  IllTypedRule,
  NotComposable,
  NoSharpGenerator,
  NotSrt1Shape,
  NotTwoCategory,
  EndpointMismatch,
  DanglingEdge,
  UnknownObject,
  UnknownGenerator,
  DuplicateName,
  ParseError,
  InvalidSymbol,
  EmptyFormula,
  NoFreeVariable,
  InvalidNumber,
  InvalidAxiom,
  TooLarge,
  InvalidMap,
  NotSurjective,
  VarNotFree,
  DanglingArc,
  InvalidArgument,
};

std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace selfref
