#ifndef INSP_JOIN_H_
#define INSP_JOIN_H_

#include <optional>
#include <vector>

#include "insp/model.h"

namespace insp {

// Degree-parity constraints on the nodes of a tree: nodes in `even_set` must
// meet an even number of selected edges, nodes in `odd_set` an odd number.
// Every other node is unconstrained.
struct ParityInstance {
  const MetricTree* tree = nullptr;
  std::vector<NodeId> even_set;
  std::vector<NodeId> odd_set;
};

struct JoinResult {
  std::vector<EdgeId> edges;  // ascending
  Rational cost;

  friend bool operator==(const JoinResult&, const JoinResult&) = default;
};

// Parity constraints of the inner-odd join: inner nodes with even c(delta(v))
// go to the even set, the rest of the inner nodes to the odd set. Terminals
// are left free.
ParityInstance ParitySets(const Instance& instance, const EdgeCapacity& c);

// True iff `edges` meets every parity constraint of `p`.
bool SatisfiesParity(const ParityInstance& p, const std::vector<EdgeId>& edges);

// Minimum-length join by a rooted two-state tree DP, O(|E| * |E|/64) with the
// tie-break. Among minimum-length joins the one whose selection vector (in
// edge order, unselected < selected) is lexicographically smallest is
// returned, i.e. earlier edges are avoided first. std::nullopt when no join
// exists.
std::optional<JoinResult> MinCostIJJoin(const ParityInstance& p);

// Exhaustive oracle with the same contract and tie-break. Throws kTooLarge
// above kBruteForceJoinMaxEdges edges.
inline constexpr int kBruteForceJoinMaxEdges = 24;
std::optional<JoinResult> BruteForceJoin(const ParityInstance& p);

}  // namespace insp

#endif  // INSP_JOIN_H_
