#ifndef INSP_SPLITOFF_H_
#define INSP_SPLITOFF_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "insp/maxflow.h"
#include "insp/model.h"

namespace insp {

// One capacitated split at `s`: z(s,u) and z(s,w) drop by `amount` and
// z(u,w) grows by `amount` (for u == w, z(s,u) drops by 2 * amount and the
// resulting loops are discarded).
struct SplitEvent {
  NodeId s = 0;
  NodeId u = 0;
  NodeId w = 0;
  std::int64_t amount = 0;
};

// Elimination of a single inner node. `demands` is the connectivity among the
// other positive-degree nodes at the moment `active` was selected, and must
// hold after every split.
struct SplitState {
  CapacitatedMultigraph graph;
  DemandMap demands;
  NodeId active = 0;
  // Maximum spanning tree of `demands`. Edge-connectivity satisfies
  // lambda(x,y) >= min(lambda(x,z), lambda(z,y)), so meeting the demand on
  // these pairs meets it on all pairs.
  std::vector<NodePair> certificate;
};

using SplitObserver =
    std::function<void(const SplitEvent& event, const SplitState& after)>;

// z(u, v) = c(uv) on tree edges, 0 elsewhere.
CapacitatedMultigraph ExpandCapacityGraph(const Instance& instance,
                                          const EdgeCapacity& c);

// Snapshots the demands for eliminating `s` from `g`.
SplitState BeginSplitting(CapacitatedMultigraph g, NodeId s);

// True iff lambda_g(x, y) >= D(x, y) for every demanded pair of `state`.
bool DemandsHold(const SplitState& state, const CapacitatedMultigraph& g);

// Applies one split in place. Requires amount <= the available capacity.
void ApplySplit(CapacitatedMultigraph& g, const SplitEvent& event);

// Largest t such that splitting t copies of (su, sw) keeps every demand.
// Admissibility is monotone in t (every cut avoiding s loses 2t or nothing),
// so the amount is found by binary search. Throws kNotANeighbor.
std::int64_t AdmissibleAmount(const SplitState& state, NodeId u, NodeId w);

// Splits at state.active until its degree is zero. Neighbour pairs (u, w)
// with u <= w by name are scanned in lexicographic order; the first with a
// positive admissible amount is split by that full amount. Throws
// kNoSplittablePair if the degree is odd or no pair can be split.
CapacitatedMultigraph SplitNode(SplitState state,
                                const SplitObserver& observer = {});

// Eliminates every inner node of `instance` in ascending name order, taking a
// fresh demand snapshot for each.
CapacitatedMultigraph EliminateInnerNodes(const Instance& instance,
                                          CapacitatedMultigraph g,
                                          const SplitObserver& observer = {});

// y(uv) = z(u, v) over terminal pairs. Throws kResidualInnerDegree if an
// inner node still has capacity.
Realization ExtractRealization(const CapacitatedMultigraph& g,
                               const Instance& instance);

// Sum over unordered pairs of d(u, v) z(u, v), with d the tree distance.
Rational Potential(const CapacitatedMultigraph& g, const MetricTree& tree);

}  // namespace insp

#endif  // INSP_SPLITOFF_H_
