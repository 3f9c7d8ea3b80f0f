#ifndef INSP_SOLVER_H_
#define INSP_SOLVER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "insp/error.h"
#include "insp/join.h"
#include "insp/model.h"
#include "insp/splitoff.h"

namespace insp {

struct EdgeViolation {
  EdgeId edge = 0;
  std::int64_t cut_requirement = 0;
};

// Tree edges whose cut requirement R(X_e) is at most 1.
struct PreconditionReport {
  std::vector<EdgeViolation> violations;
  bool ok() const { return violations.empty(); }
};

class PreconditionError : public InspError {
 public:
  PreconditionError(const std::string& message, PreconditionReport report)
      : InspError(ErrorCode::kPreconditionViolated, message),
        report_(std::move(report)) {}
  const PreconditionReport& report() const { return report_; }

 private:
  PreconditionReport report_;
};

struct Solution {
  Realization realization;
  EdgeCapacity capacity;  // c^R raised by one on the join edges
  JoinResult join;
  Rational cost;
  Rational formula_cost;
};

struct SolveOptions {
  // Called after every split, in order.
  SplitObserver on_split;
};

PreconditionReport CheckPreconditions(const Instance& instance);

// Minimum cost of an integer realization: sum l(e) R(X_e) plus the length of
// a minimum inner-odd join. Throws PreconditionError.
Rational OptimalCostFormula(const Instance& instance);

// Minimum-cost integer realization. Throws PreconditionError, or
// InspError(kSolverInternalError) if any internal consistency check fails.
Solution Solve(const Instance& instance, const SolveOptions& options = {});

}  // namespace insp

#endif  // INSP_SOLVER_H_
