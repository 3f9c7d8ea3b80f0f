#include "insp/error.h"

namespace insp {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kNegativeLength: return "NegativeLength";
    case ErrorCode::kTerminalNotInTree: return "TerminalNotInTree";
    case ErrorCode::kDuplicateNode: return "DuplicateNode";
    case ErrorCode::kEmptyTerminalSet: return "EmptyTerminalSet";
    case ErrorCode::kDuplicateRequirement: return "DuplicateRequirement";
    case ErrorCode::kSelfRequirement: return "SelfRequirement";
    case ErrorCode::kInvalidRequirement: return "InvalidRequirement";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kUnknownTerminalPair: return "UnknownTerminalPair";
    case ErrorCode::kEmptyOrFullCut: return "EmptyOrFullCut";
    case ErrorCode::kSameNode: return "SameNode";
    case ErrorCode::kNotANeighbor: return "NotANeighbor";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kValueOne: return "ValueOne";
    case ErrorCode::kNoSplittablePair: return "NoSplittablePair";
    case ErrorCode::kResidualInnerDegree: return "ResidualInnerDegree";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kSolverInternalError: return "SolverInternalError";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace insp
