#include "insp/join.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

#include "insp/error.h"

namespace insp {
namespace {

enum class Parity : char { kFree, kEven, kOdd };

std::vector<Parity> ConstraintVector(const ParityInstance& p) {
  if (p.tree == nullptr) {
    throw InspError(ErrorCode::kUnknownNode, "parity instance has no tree");
  }
  const int n = p.tree->num_nodes();
  std::vector<Parity> want(n, Parity::kFree);
  auto mark = [&](const std::vector<NodeId>& nodes, Parity parity) {
    for (NodeId v : nodes) {
      if (v < 0 || v >= n) {
        throw InspError(ErrorCode::kUnknownNode,
                        "parity node " + std::to_string(v));
      }
      if (want[v] != Parity::kFree && want[v] != parity) {
        throw InspError(ErrorCode::kUnknownNode,
                        "node '" + p.tree->name(v) + "' is both even and odd");
      }
      want[v] = parity;
    }
  };
  mark(p.even_set, Parity::kEven);
  mark(p.odd_set, Parity::kOdd);
  return want;
}

// Cost key of a partial join: total length, then the selection vector.
// Selection vectors of disjoint subtrees are disjoint, so "adding" two keys
// is a union.
struct Key {
  Rational length;
  std::vector<bool> chosen;

  bool operator<(const Key& other) const {
    if (length != other.length) return length < other.length;
    return chosen < other.chosen;
  }
};

Key Combine(const Key& a, const Key& b) {
  Key out{a.length + b.length, a.chosen};
  for (std::size_t i = 0; i < out.chosen.size(); ++i) {
    if (b.chosen[i]) out.chosen[i] = true;
  }
  return out;
}

JoinResult ToResult(const MetricTree& tree, const std::vector<bool>& chosen) {
  JoinResult result{{}, Rational(0)};
  for (EdgeId e = 0; e < tree.num_edges(); ++e) {
    if (chosen[e]) {
      result.edges.push_back(e);
      result.cost += tree.edge(e).length;
    }
  }
  return result;
}

}  // namespace

ParityInstance ParitySets(const Instance& instance, const EdgeCapacity& c) {
  const MetricTree& tree = instance.tree();
  ParityInstance p{&tree, {}, {}};
  for (NodeId v = 0; v < tree.num_nodes(); ++v) {
    if (instance.IsTerminal(v)) continue;
    std::int64_t load = 0;
    for (const auto& [neighbor, e] : tree.incident(v)) load += c[e];
    (load % 2 == 0 ? p.even_set : p.odd_set).push_back(v);
  }
  return p;
}

bool SatisfiesParity(const ParityInstance& p, const std::vector<EdgeId>& edges) {
  const std::vector<Parity> want = ConstraintVector(p);
  std::vector<int> degree(p.tree->num_nodes(), 0);
  for (EdgeId e : edges) {
    const TreeEdge& edge = p.tree->edge(e);
    ++degree[edge.u];
    ++degree[edge.v];
  }
  for (NodeId v = 0; v < p.tree->num_nodes(); ++v) {
    if (want[v] == Parity::kEven && degree[v] % 2 != 0) return false;
    if (want[v] == Parity::kOdd && degree[v] % 2 != 1) return false;
  }
  return true;
}

std::optional<JoinResult> MinCostIJJoin(const ParityInstance& p) {
  const std::vector<Parity> want = ConstraintVector(p);
  const MetricTree& tree = *p.tree;
  const int n = tree.num_nodes();
  const std::size_t m = tree.num_edges();

  // Post-order over the tree rooted at tree.root().
  std::vector<NodeId> order;
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<NodeId> parent(n, -1);
  {
    std::vector<NodeId> stack{tree.root()};
    std::vector<char> seen(n, 0);
    seen[tree.root()] = 1;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (const auto& [w, e] : tree.incident(v)) {
        if (seen[w]) continue;
        seen[w] = 1;
        parent[w] = v;
        parent_edge[w] = e;
        stack.push_back(w);
      }
    }
    std::reverse(order.begin(), order.end());
  }

  // best[v][q]: cheapest edge set inside v's subtree meeting every
  // constraint strictly below v, with q = parity of chosen child edges at v.
  std::vector<std::array<std::optional<Key>, 2>> best(n);
  auto accepts = [&](NodeId v, int parity) {
    return want[v] == Parity::kFree ||
           (want[v] == Parity::kEven && parity == 0) ||
           (want[v] == Parity::kOdd && parity == 1);
  };

  for (NodeId v : order) {
    std::optional<Key> acc[2];
    acc[0] = Key{Rational(0), std::vector<bool>(m, false)};
    for (const auto& [child, e] : tree.incident(v)) {
      if (parent[child] != v || parent_edge[child] != e) continue;
      // Child contribution without / with the connecting edge: the child's
      // own parity is final once this edge is decided.
      std::optional<Key> skip;
      std::optional<Key> take;
      for (int q = 0; q < 2; ++q) {
        if (!best[child][q]) continue;
        if (accepts(child, q) && (!skip || *best[child][q] < *skip)) {
          skip = best[child][q];
        }
        if (accepts(child, q ^ 1)) {
          Key with = *best[child][q];
          with.length += tree.edge(e).length;
          with.chosen[e] = true;
          if (!take || with < *take) take = std::move(with);
        }
      }
      std::optional<Key> next[2];
      for (int q = 0; q < 2; ++q) {
        if (!acc[q]) continue;
        if (skip) {
          Key k = Combine(*acc[q], *skip);
          if (!next[q] || k < *next[q]) next[q] = std::move(k);
        }
        if (take) {
          Key k = Combine(*acc[q], *take);
          if (!next[q ^ 1] || k < *next[q ^ 1]) next[q ^ 1] = std::move(k);
        }
      }
      acc[0] = std::move(next[0]);
      acc[1] = std::move(next[1]);
    }
    best[v][0] = std::move(acc[0]);
    best[v][1] = std::move(acc[1]);
  }

  const NodeId root = tree.root();
  std::optional<Key> answer;
  for (int q = 0; q < 2; ++q) {
    if (best[root][q] && accepts(root, q) &&
        (!answer || *best[root][q] < *answer)) {
      answer = best[root][q];
    }
  }
  if (!answer) return std::nullopt;
  JoinResult result = ToResult(tree, answer->chosen);
  if (!SatisfiesParity(p, result.edges)) {
    throw InspError(ErrorCode::kSolverInternalError,
                    "join DP produced a set violating the parity constraints");
  }
  return result;
}

std::optional<JoinResult> BruteForceJoin(const ParityInstance& p) {
  ConstraintVector(p);
  const MetricTree& tree = *p.tree;
  const int m = tree.num_edges();
  if (m > kBruteForceJoinMaxEdges) {
    throw InspError(ErrorCode::kTooLarge,
                    std::to_string(m) + " edges exceed the enumeration guard");
  }
  std::optional<Key> best;
  std::vector<EdgeId> edges;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    edges.clear();
    for (int e = 0; e < m; ++e) {
      if (mask & (std::uint32_t{1} << e)) edges.push_back(e);
    }
    if (!SatisfiesParity(p, edges)) continue;
    Key key{Rational(0), std::vector<bool>(m, false)};
    for (EdgeId e : edges) {
      key.length += tree.edge(e).length;
      key.chosen[e] = true;
    }
    if (!best || key < *best) best = std::move(key);
  }
  if (!best) return std::nullopt;
  return ToResult(tree, best->chosen);
}

}  // namespace insp
