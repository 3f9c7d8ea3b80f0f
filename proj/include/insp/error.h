#ifndef INSP_ERROR_H_
#define INSP_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace insp {

enum class ErrorCode {
  kNotATree,
  kNegativeLength,
  kTerminalNotInTree,
  kDuplicateNode,
  kEmptyTerminalSet,
  kDuplicateRequirement,
  kSelfRequirement,
  kInvalidRequirement,
  kUnknownNode,
  kUnknownEdge,
  kUnknownTerminalPair,
  kEmptyOrFullCut,
  kSameNode,
  kNotANeighbor,
  kTooLarge,
  kValueOne,
  kNoSplittablePair,
  kResidualInnerDegree,
  kPreconditionViolated,
  kSolverInternalError,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

class InspError : public std::runtime_error {
 public:
  InspError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace insp

#endif  // INSP_ERROR_H_
