#include "selfref/error.hpp"

namespace selfref {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ChainMismatch: return "ChainMismatch";
    case ErrorCode::RewriteBudgetExceeded: return "RewriteBudgetExceeded";
    case ErrorCode::IllTypedRule: return "IllTypedRule";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::NoSharpGenerator: return "NoSharpGenerator";
    case ErrorCode::NotSrt1Shape: return "NotSrt1Shape";
    case ErrorCode::NotTwoCategory: return "NotTwoCategory";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidSymbol: return "InvalidSymbol";
    case ErrorCode::EmptyFormula: return "EmptyFormula";
    case ErrorCode::NoFreeVariable: return "NoFreeVariable";
    case ErrorCode::InvalidNumber: return "InvalidNumber";
    case ErrorCode::InvalidAxiom: return "InvalidAxiom";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidMap: return "InvalidMap";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::VarNotFree: return "VarNotFree";
    case ErrorCode::DanglingArc: return "DanglingArc";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace selfref
