#include "insp/splitoff.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "insp/error.h"

namespace insp {
namespace {

std::vector<NodePair> MaxSpanningForest(const DemandMap& demands,
                                        int num_nodes) {
  std::vector<std::pair<NodePair, std::int64_t>> pairs(demands.begin(),
                                                       demands.end());
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return a.second > b.second;
  });
  std::vector<NodeId> parent(num_nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<NodePair> forest;
  for (const auto& [pair, value] : pairs) {
    if (value <= 0) break;
    const NodeId a = find(pair.first);
    const NodeId b = find(pair.second);
    if (a == b) continue;
    parent[a] = b;
    forest.push_back(pair);
  }
  return forest;
}

void CheckNeighbor(const SplitState& state, NodeId v) {
  if (v < 0 || v >= state.graph.num_nodes() ||
      state.graph.Capacity(state.active, v) == 0) {
    throw InspError(ErrorCode::kNotANeighbor,
                    "node " + std::to_string(v) + " is not adjacent to '" +
                        state.graph.name(state.active) + "'");
  }
}

}  // namespace

CapacitatedMultigraph ExpandCapacityGraph(const Instance& instance,
                                          const EdgeCapacity& c) {
  const MetricTree& tree = instance.tree();
  if (static_cast<int>(c.values.size()) != tree.num_edges()) {
    throw InspError(ErrorCode::kUnknownEdge,
                    "capacity is not keyed by the tree's edges");
  }
  CapacitatedMultigraph g(tree.names());
  for (EdgeId e = 0; e < tree.num_edges(); ++e) {
    g.SetCapacity(tree.edge(e).u, tree.edge(e).v, c[e]);
  }
  return g;
}

SplitState BeginSplitting(CapacitatedMultigraph g, NodeId s) {
  SplitState state;
  state.demands = ConnectivitySnapshot(g, s);
  state.certificate = MaxSpanningForest(state.demands, g.num_nodes());
  state.graph = std::move(g);
  state.active = s;
  return state;
}

bool DemandsHold(const SplitState& state, const CapacitatedMultigraph& g) {
  for (const NodePair& pair : state.certificate) {
    if (MaxFlow(g, pair.first, pair.second) < state.demands.at(pair)) {
      return false;
    }
  }
  return true;
}

void ApplySplit(CapacitatedMultigraph& g, const SplitEvent& event) {
  if (event.u == event.w) {
    g.AddCapacity(event.s, event.u, -2 * event.amount);
    return;
  }
  g.AddCapacity(event.s, event.u, -event.amount);
  g.AddCapacity(event.s, event.w, -event.amount);
  g.AddCapacity(event.u, event.w, event.amount);
}

std::int64_t AdmissibleAmount(const SplitState& state, NodeId u, NodeId w) {
  CheckNeighbor(state, u);
  CheckNeighbor(state, w);
  const NodeId s = state.active;
  const std::int64_t limit =
      u == w ? state.graph.Capacity(s, u) / 2
             : std::min(state.graph.Capacity(s, u), state.graph.Capacity(s, w));
  auto admissible = [&](std::int64_t t) {
    CapacitatedMultigraph trial = state.graph;
    ApplySplit(trial, {s, u, w, t});
    return DemandsHold(state, trial);
  };
  if (limit == 0) return 0;
  if (admissible(limit)) return limit;
  // Invariant: lo admissible, hi not.
  std::int64_t lo = 0;
  std::int64_t hi = limit;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (admissible(mid) ? lo : hi) = mid;
  }
  return lo;
}

CapacitatedMultigraph SplitNode(SplitState state,
                                const SplitObserver& observer) {
  const NodeId s = state.active;
  while (true) {
    const std::int64_t degree = state.graph.Degree(s);
    if (degree == 0) break;
    if (degree % 2 != 0) {
      throw InspError(ErrorCode::kNoSplittablePair,
                      "odd degree " + std::to_string(degree) + " at '" +
                          state.graph.name(s) + "'");
    }
    std::vector<NodeId> neighbors = state.graph.Neighbors(s);
    std::sort(neighbors.begin(), neighbors.end(), [&](NodeId a, NodeId b) {
      return state.graph.name(a) < state.graph.name(b);
    });
    bool progressed = false;
    for (std::size_t i = 0; i < neighbors.size() && !progressed; ++i) {
      for (std::size_t j = i; j < neighbors.size(); ++j) {
        const std::int64_t t =
            AdmissibleAmount(state, neighbors[i], neighbors[j]);
        if (t == 0) continue;
        const SplitEvent event{s, neighbors[i], neighbors[j], t};
        ApplySplit(state.graph, event);
        if (observer) observer(event, state);
        progressed = true;
        break;
      }
    }
    if (!progressed) {
      throw InspError(ErrorCode::kNoSplittablePair,
                      "no splittable pair at '" + state.graph.name(s) +
                          "' (degree " + std::to_string(degree) + ")");
    }
  }
  return std::move(state.graph);
}

CapacitatedMultigraph EliminateInnerNodes(const Instance& instance,
                                          CapacitatedMultigraph g,
                                          const SplitObserver& observer) {
  for (NodeId s : instance.InnerNodesByName()) {
    if (g.Degree(s) == 0) continue;
    g = SplitNode(BeginSplitting(std::move(g), s), observer);
  }
  return g;
}

Realization ExtractRealization(const CapacitatedMultigraph& g,
                               const Instance& instance) {
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (!instance.IsTerminal(v) && g.Degree(v) > 0) {
      throw InspError(ErrorCode::kResidualInnerDegree,
                      "inner node '" + g.name(v) + "' has degree " +
                          std::to_string(g.Degree(v)));
    }
  }
  Realization y;
  const auto& terminals = instance.terminals();
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    for (std::size_t j = i + 1; j < terminals.size(); ++j) {
      y.Set(terminals[i], terminals[j],
            g.Capacity(terminals[i], terminals[j]));
    }
  }
  return y;
}

Rational Potential(const CapacitatedMultigraph& g, const MetricTree& tree) {
  Rational total(0);
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v = u + 1; v < g.num_nodes(); ++v) {
      if (const std::int64_t z = g.Capacity(u, v); z > 0) {
        total += tree.Distance(u, v) * z;
      }
    }
  }
  return total;
}

}  // namespace insp
