#include "insp/solver.h"

#include <string>

#include "insp/verify.h"

namespace insp {
namespace {

void RequirePreconditions(const Instance& instance) {
  PreconditionReport report = CheckPreconditions(instance);
  if (report.ok()) return;
  const TreeEdge& first = instance.tree().edge(report.violations.front().edge);
  throw PreconditionError(
      std::to_string(report.violations.size()) +
          " tree edge(s) with R(X_e) <= 1, first " +
          instance.tree().name(first.u) + "-" + instance.tree().name(first.v),
      std::move(report));
}

JoinResult InnerOddJoin(const Instance& instance, const EdgeCapacity& base) {
  auto join = MinCostIJJoin(ParitySets(instance, base));
  // Every leaf is a terminal and hence unconstrained, so a join exists.
  if (!join) {
    throw InspError(ErrorCode::kSolverInternalError,
                    "no inner-odd join exists");
  }
  return *std::move(join);
}

}  // namespace

PreconditionReport CheckPreconditions(const Instance& instance) {
  PreconditionReport report;
  const EdgeCapacity base = BaseCapacity(instance);
  for (EdgeId e = 0; e < instance.tree().num_edges(); ++e) {
    if (base[e] <= 1) report.violations.push_back({e, base[e]});
  }
  return report;
}

Rational OptimalCostFormula(const Instance& instance) {
  RequirePreconditions(instance);
  const EdgeCapacity base = BaseCapacity(instance);
  return CapacityCost(instance.tree(), base) +
         InnerOddJoin(instance, base).cost;
}

Solution Solve(const Instance& instance, const SolveOptions& options) {
  RequirePreconditions(instance);
  Solution solution;
  solution.capacity = BaseCapacity(instance);
  solution.join = InnerOddJoin(instance, solution.capacity);
  solution.formula_cost =
      CapacityCost(instance.tree(), solution.capacity) + solution.join.cost;
  for (EdgeId e : solution.join.edges) ++solution.capacity[e];

  if (!VerifyFeasibleCapacity(instance, solution.capacity).ok()) {
    throw InspError(ErrorCode::kSolverInternalError,
                    "raised capacity is not r-feasible");
  }

  CapacitatedMultigraph graph =
      ExpandCapacityGraph(instance, solution.capacity);
  try {
    graph = EliminateInnerNodes(instance, std::move(graph), options.on_split);
  } catch (const InspError& error) {
    if (error.code() != ErrorCode::kNoSplittablePair) throw;
    throw InspError(ErrorCode::kSolverInternalError, error.what());
  }
  solution.realization = ExtractRealization(graph, instance);
  solution.cost = RealizationCost(instance, solution.realization);

  if (solution.cost != solution.formula_cost) {
    throw InspError(ErrorCode::kSolverInternalError,
                    "realization cost " + FormatRational(solution.cost) +
                        " differs from formula " +
                        FormatRational(solution.formula_cost));
  }
  return solution;
}

}  // namespace insp
