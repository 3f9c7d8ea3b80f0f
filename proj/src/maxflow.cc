#include "insp/maxflow.h"

#include <algorithm>
#include <limits>
#include <string>

#include "insp/error.h"

namespace insp {

CapacitatedMultigraph::CapacitatedMultigraph(std::vector<std::string> names)
    : names_(std::move(names)), z_(names_.size() * names_.size(), 0) {}

void CapacitatedMultigraph::SetCapacity(NodeId u, NodeId v,
                                        std::int64_t value) {
  if (u < 0 || v < 0 || u >= num_nodes() || v >= num_nodes()) {
    throw InspError(ErrorCode::kUnknownNode, "graph node out of range");
  }
  if (value < 0) {
    throw InspError(ErrorCode::kSolverInternalError,
                    "negative capacity on " + names_[u] + "-" + names_[v]);
  }
  if (u == v) return;
  z_[Index(u, v)] = value;
  z_[Index(v, u)] = value;
}

std::int64_t CapacitatedMultigraph::Degree(NodeId v) const {
  std::int64_t total = 0;
  for (NodeId w = 0; w < num_nodes(); ++w) total += Capacity(v, w);
  return total;
}

std::vector<NodeId> CapacitatedMultigraph::Neighbors(NodeId v) const {
  std::vector<NodeId> out;
  for (NodeId w = 0; w < num_nodes(); ++w) {
    if (Capacity(v, w) > 0) out.push_back(w);
  }
  return out;
}

std::int64_t MaxFlow(const CapacitatedMultigraph& g, NodeId s, NodeId t) {
  const int n = g.num_nodes();
  if (s < 0 || t < 0 || s >= n || t >= n) {
    throw InspError(ErrorCode::kUnknownNode, "max-flow endpoint out of range");
  }
  if (s == t) throw InspError(ErrorCode::kSameNode, "s == t");

  // Undirected edge {u, v} of capacity z becomes arcs u->v and v->u of
  // capacity z each; the residual matrix then starts equal to z.
  std::vector<std::int64_t> residual(static_cast<std::size_t>(n) * n);
  std::vector<std::vector<NodeId>> adjacency(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      const std::int64_t z = g.Capacity(u, v);
      residual[static_cast<std::size_t>(u) * n + v] = z;
      if (z > 0) adjacency[u].push_back(v);
    }
  }
  auto res = [&](NodeId u, NodeId v) -> std::int64_t& {
    return residual[static_cast<std::size_t>(u) * n + v];
  };

  std::vector<int> level(n);
  std::vector<std::size_t> cursor(n);
  std::vector<NodeId> queue(n);
  std::int64_t flow = 0;
  while (true) {
    std::fill(level.begin(), level.end(), -1);
    level[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const NodeId u = queue[head++];
      for (NodeId v : adjacency[u]) {
        if (level[v] < 0 && res(u, v) > 0) {
          level[v] = level[u] + 1;
          queue[tail++] = v;
        }
      }
    }
    if (level[t] < 0) break;
    std::fill(cursor.begin(), cursor.end(), 0);

    // Blocking flow by iterative DFS.
    while (true) {
      std::vector<NodeId> path{s};
      bool found = false;
      while (!path.empty()) {
        const NodeId u = path.back();
        if (u == t) {
          found = true;
          break;
        }
        bool advanced = false;
        for (; cursor[u] < adjacency[u].size(); ++cursor[u]) {
          const NodeId v = adjacency[u][cursor[u]];
          if (level[v] == level[u] + 1 && res(u, v) > 0) {
            path.push_back(v);
            advanced = true;
            break;
          }
        }
        if (!advanced) {
          level[u] = -1;  // dead end for this phase
          path.pop_back();
          if (!path.empty()) ++cursor[path.back()];
        }
      }
      if (!found) break;
      std::int64_t push = std::numeric_limits<std::int64_t>::max();
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        push = std::min(push, res(path[i], path[i + 1]));
      }
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        res(path[i], path[i + 1]) -= push;
        res(path[i + 1], path[i]) += push;
      }
      flow += push;
    }
  }
  return flow;
}

DemandMap ConnectivitySnapshot(const CapacitatedMultigraph& g, NodeId exclude) {
  if (exclude < 0 || exclude >= g.num_nodes()) {
    throw InspError(ErrorCode::kUnknownNode, "excluded node out of range");
  }
  std::vector<NodeId> active;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (v != exclude && g.Degree(v) > 0) active.push_back(v);
  }
  DemandMap demands;
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t j = i + 1; j < active.size(); ++j) {
      demands[MakePair(active[i], active[j])] =
          MaxFlow(g, active[i], active[j]);
    }
  }
  return demands;
}

}  // namespace insp
