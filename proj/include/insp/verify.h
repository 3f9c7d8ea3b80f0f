#ifndef INSP_VERIFY_H_
#define INSP_VERIFY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "insp/maxflow.h"
#include "insp/model.h"

namespace insp {

struct Deficit {
  NodeId s = 0;
  NodeId t = 0;
  std::int64_t required = 0;
  std::int64_t achieved = 0;
};

struct RealizationReport {
  std::vector<Deficit> deficits;
  bool ok() const { return deficits.empty(); }
};

// Checks max-flow under y against r(s, t) for every terminal pair with
// r(s, t) > 0 and reports every shortfall.
RealizationReport VerifyRealization(const Instance& instance,
                                    const Realization& y);

struct CapacityReport {
  std::vector<NodeId> odd_inner_nodes;  // (c1) failures
  std::vector<EdgeId> short_edges;      // (c2) failures: c(e) < R(X_e)
  bool ok() const { return odd_inner_nodes.empty() && short_edges.empty(); }
};

// Even load at every inner node and c(e) >= R(X_e) on every edge.
CapacityReport VerifyFeasibleCapacity(const Instance& instance,
                                      const EdgeCapacity& c);

// sum l(e) R(X_e): the optimum of the fractional problem, hence a lower
// bound for the integer one.
Rational FractionalLowerBound(const Instance& instance);

// ceil(sum R(u) / 2), the integer optimum for uniform cost when no R(u) is
// 1. Throws kValueOne.
Rational UniformIntegerFormula(std::span<const std::int64_t> cut_values);

// Tree loads induced by y: c(e) = sum of y(ij) over pairs split by e. Equal
// cost to y, and r-feasible whenever y is a realization.
EdgeCapacity ProjectToTree(const Instance& instance, const Realization& y);

// y seen as a graph on the tree's node set (inner nodes isolated).
CapacitatedMultigraph RealizationGraph(const Instance& instance,
                                       const Realization& y);

inline constexpr int kBruteForceMaxTerminals = 5;

// Exhaustive minimum-cost integer realization with every entry in
// [0, per_edge_bound]; the bound defaults to max r. Ties go to the first
// candidate in enumeration order. Throws kTooLarge when |V| > 5 or the bound
// exceeds max r; returns std::nullopt if nothing within the bound works.
std::optional<Realization> BruteForceInsp(
    const Instance& instance,
    std::optional<std::int64_t> per_edge_bound = std::nullopt);

}  // namespace insp

#endif  // INSP_VERIFY_H_
