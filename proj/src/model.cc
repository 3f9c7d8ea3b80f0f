#include "insp/model.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "insp/error.h"

namespace insp {

MetricTree::MetricTree(std::vector<std::string> names,
                       std::vector<TreeEdge> edges, NodeId root)
    : names_(std::move(names)), edges_(std::move(edges)), root_(root) {
  const int n = num_nodes();
  if (n == 0) throw InspError(ErrorCode::kNotATree, "tree has no nodes");
  for (NodeId i = 0; i < n; ++i) {
    if (!index_.emplace(names_[i], i).second) {
      throw InspError(ErrorCode::kDuplicateNode, "node '" + names_[i] + "'");
    }
  }
  if (root_ < 0 || root_ >= n) {
    throw InspError(ErrorCode::kUnknownNode, "root index out of range");
  }
  if (num_edges() != n - 1) {
    throw InspError(ErrorCode::kNotATree,
                    std::to_string(num_edges()) + " edges on " +
                        std::to_string(n) + " nodes");
  }
  incident_.assign(n, {});
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const TreeEdge& edge = edges_[e];
    if (edge.u < 0 || edge.u >= n || edge.v < 0 || edge.v >= n) {
      throw InspError(ErrorCode::kUnknownNode, "edge endpoint out of range");
    }
    if (edge.u == edge.v) {
      throw InspError(ErrorCode::kNotATree, "loop at '" + names_[edge.u] + "'");
    }
    if (edge.length < 0) {
      throw InspError(ErrorCode::kNegativeLength,
                      "edge " + names_[edge.u] + "-" + names_[edge.v]);
    }
    incident_[edge.u].emplace_back(edge.v, e);
    incident_[edge.v].emplace_back(edge.u, e);
  }

  // Iterative DFS from the root: orientation, Euler intervals, connectivity.
  child_of_edge_.assign(num_edges(), -1);
  enter_.assign(n, -1);
  leave_.assign(n, -1);
  std::vector<std::pair<NodeId, std::size_t>> stack{{root_, 0}};
  std::vector<EdgeId> parent_edge(n, -1);
  int clock = 0;
  enter_[root_] = clock++;
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next == incident_[node].size()) {
      leave_[node] = clock;
      stack.pop_back();
      continue;
    }
    const auto [neighbor, e] = incident_[node][next++];
    if (e == parent_edge[node]) continue;
    if (enter_[neighbor] != -1) {
      throw InspError(ErrorCode::kNotATree,
                      "cycle through '" + names_[neighbor] + "'");
    }
    parent_edge[neighbor] = e;
    child_of_edge_[e] = neighbor;
    enter_[neighbor] = clock++;
    stack.emplace_back(neighbor, 0);
  }
  if (clock != n) throw InspError(ErrorCode::kNotATree, "tree is disconnected");

  distances_.assign(static_cast<std::size_t>(n) * n, Rational(0));
  for (NodeId source = 0; source < n; ++source) {
    Rational* row = &distances_[static_cast<std::size_t>(source) * n];
    std::vector<NodeId> frontier{source};
    std::vector<char> seen(n, 0);
    seen[source] = 1;
    while (!frontier.empty()) {
      const NodeId node = frontier.back();
      frontier.pop_back();
      for (const auto& [neighbor, e] : incident_[node]) {
        if (seen[neighbor]) continue;
        seen[neighbor] = 1;
        row[neighbor] = row[node] + edges_[e].length;
        frontier.push_back(neighbor);
      }
    }
  }
}

void MetricTree::CheckNode(NodeId node) const {
  if (node < 0 || node >= num_nodes()) {
    throw InspError(ErrorCode::kUnknownNode,
                    "node index " + std::to_string(node));
  }
}

const std::string& MetricTree::name(NodeId node) const {
  CheckNode(node);
  return names_[node];
}

NodeId MetricTree::FindNode(const std::string& name) const {
  if (auto id = LookupNode(name)) return *id;
  throw InspError(ErrorCode::kUnknownNode, "node '" + name + "'");
}

std::optional<NodeId> MetricTree::LookupNode(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const TreeEdge& MetricTree::edge(EdgeId e) const {
  if (e < 0 || e >= num_edges()) {
    throw InspError(ErrorCode::kUnknownEdge, "edge index " + std::to_string(e));
  }
  return edges_[e];
}

std::optional<EdgeId> MetricTree::FindEdge(NodeId u, NodeId v) const {
  CheckNode(u);
  CheckNode(v);
  for (const auto& [neighbor, e] : incident_[u]) {
    if (neighbor == v) return e;
  }
  return std::nullopt;
}

const std::vector<std::pair<NodeId, EdgeId>>& MetricTree::incident(
    NodeId node) const {
  CheckNode(node);
  return incident_[node];
}

Rational MetricTree::Distance(NodeId i, NodeId j) const {
  CheckNode(i);
  CheckNode(j);
  return distances_[static_cast<std::size_t>(i) * num_nodes() + j];
}

NodeId MetricTree::ChildSide(EdgeId e) const {
  edge(e);
  return child_of_edge_[e];
}

bool MetricTree::BelowEdge(EdgeId e, NodeId node) const {
  const NodeId child = ChildSide(e);
  CheckNode(node);
  return enter_[child] <= enter_[node] && enter_[node] < leave_[child];
}

std::int64_t Realization::Get(NodeId s, NodeId t) const {
  const auto it = entries_.find(MakePair(s, t));
  return it == entries_.end() ? 0 : it->second;
}

void Realization::Set(NodeId s, NodeId t, std::int64_t value) {
  if (value == 0) {
    entries_.erase(MakePair(s, t));
  } else {
    entries_[MakePair(s, t)] = value;
  }
}

Instance::Instance(MetricTree tree, std::vector<NodeId> terminals,
                   RequirementMatrix requirements)
    : tree_(std::move(tree)),
      terminals_(std::move(terminals)),
      is_terminal_(tree_.num_nodes(), 0),
      requirements_(std::move(requirements)) {
  if (terminals_.empty()) {
    throw InspError(ErrorCode::kEmptyTerminalSet, "no terminals");
  }
  for (NodeId t : terminals_) {
    if (t < 0 || t >= tree_.num_nodes()) {
      throw InspError(ErrorCode::kTerminalNotInTree,
                      "terminal index " + std::to_string(t));
    }
    if (is_terminal_[t]) {
      throw InspError(ErrorCode::kDuplicateNode,
                      "terminal '" + tree_.name(t) + "'");
    }
    is_terminal_[t] = 1;
  }
  if (!is_terminal_[tree_.root()]) {
    throw InspError(ErrorCode::kTerminalNotInTree, "root is not a terminal");
  }
}

std::vector<NodeId> Instance::InnerNodesByName() const {
  std::vector<NodeId> inner;
  for (NodeId v = 0; v < tree_.num_nodes(); ++v) {
    if (!is_terminal_[v]) inner.push_back(v);
  }
  std::sort(inner.begin(), inner.end(), [&](NodeId a, NodeId b) {
    return tree_.name(a) < tree_.name(b);
  });
  return inner;
}

std::int64_t Instance::MaxRequirement() const {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < terminals_.size(); ++i) {
    for (std::size_t j = i + 1; j < terminals_.size(); ++j) {
      best = std::max(best, Requirement(terminals_[i], terminals_[j]));
    }
  }
  return best;
}

bool operator==(const Instance& a, const Instance& b) {
  if (a.tree_.names() != b.tree_.names()) return false;
  if (a.tree_.root() != b.tree_.root()) return false;
  if (a.tree_.num_edges() != b.tree_.num_edges()) return false;
  for (EdgeId e = 0; e < a.tree_.num_edges(); ++e) {
    const TreeEdge& x = a.tree_.edge(e);
    const TreeEdge& y = b.tree_.edge(e);
    if (x.u != y.u || x.v != y.v || x.length != y.length) return false;
  }
  return a.terminals_ == b.terminals_ && a.requirements_ == b.requirements_;
}

Instance BuildInstance(const std::vector<std::string>& terminals,
                       const std::vector<std::string>& tree_nodes,
                       const std::vector<NamedEdge>& tree_edges,
                       const std::vector<RequirementTriple>& requirements) {
  if (terminals.empty()) {
    throw InspError(ErrorCode::kEmptyTerminalSet, "no terminals");
  }
  std::map<std::string, int> raw_index;
  for (std::size_t i = 0; i < tree_nodes.size(); ++i) {
    if (!raw_index.emplace(tree_nodes[i], static_cast<int>(i)).second) {
      throw InspError(ErrorCode::kDuplicateNode,
                      "tree node '" + tree_nodes[i] + "'");
    }
  }
  const int n = static_cast<int>(tree_nodes.size());
  std::vector<char> terminal(n, 0);
  for (const std::string& t : terminals) {
    const auto it = raw_index.find(t);
    if (it == raw_index.end()) {
      throw InspError(ErrorCode::kTerminalNotInTree, "terminal '" + t + "'");
    }
    if (terminal[it->second]) {
      throw InspError(ErrorCode::kDuplicateNode, "terminal '" + t + "'");
    }
    terminal[it->second] = 1;
  }

  std::vector<TreeEdge> raw_edges;
  raw_edges.reserve(tree_edges.size());
  for (const NamedEdge& e : tree_edges) {
    const auto u = raw_index.find(e.u);
    const auto v = raw_index.find(e.v);
    if (u == raw_index.end() || v == raw_index.end()) {
      throw InspError(ErrorCode::kUnknownNode,
                      "edge " + e.u + "-" + e.v + " names an unknown node");
    }
    if (e.length < 0) {
      throw InspError(ErrorCode::kNegativeLength, "edge " + e.u + "-" + e.v);
    }
    raw_edges.push_back({u->second, v->second, e.length});
  }
  // Validate the full tree before pruning so malformed input is reported as
  // such rather than as a side effect of pruning.
  MetricTree(tree_nodes, raw_edges, raw_index.at(terminals.front()));

  // Prune non-terminal leaves until every leaf is a terminal.
  std::vector<int> degree(n, 0);
  for (const TreeEdge& e : raw_edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<char> alive(n, 1);
  std::vector<char> edge_alive(raw_edges.size(), 1);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    if (!terminal[v] && degree[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (std::size_t e = 0; e < raw_edges.size(); ++e) {
      if (!edge_alive[e]) continue;
      const int other = raw_edges[e].u == v   ? raw_edges[e].v
                        : raw_edges[e].v == v ? raw_edges[e].u
                                              : -1;
      if (other < 0) continue;
      edge_alive[e] = 0;
      if (--degree[other] <= 1 && !terminal[other] && alive[other]) {
        queue.push_back(other);
      }
    }
  }

  std::vector<NodeId> remap(n, -1);
  std::vector<std::string> names;
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    remap[v] = static_cast<NodeId>(names.size());
    names.push_back(tree_nodes[v]);
  }
  std::vector<TreeEdge> edges;
  for (std::size_t e = 0; e < raw_edges.size(); ++e) {
    if (!edge_alive[e]) continue;
    edges.push_back(
        {remap[raw_edges[e].u], remap[raw_edges[e].v], raw_edges[e].length});
  }
  std::vector<NodeId> terminal_ids;
  for (const std::string& t : terminals) {
    terminal_ids.push_back(remap[raw_index.at(t)]);
  }
  MetricTree tree(std::move(names), std::move(edges), terminal_ids.front());

  RequirementMatrix matrix(tree.num_nodes());
  std::set<NodePair> seen;
  for (const RequirementTriple& req : requirements) {
    const auto s = tree.LookupNode(req.s);
    const auto t = tree.LookupNode(req.t);
    if (!s || !t || !terminal[raw_index.at(req.s)] ||
        !terminal[raw_index.at(req.t)]) {
      throw InspError(ErrorCode::kUnknownTerminalPair,
                      "requirement " + req.s + "-" + req.t);
    }
    if (*s == *t) {
      throw InspError(ErrorCode::kSelfRequirement, "requirement on " + req.s);
    }
    if (req.r < 0) {
      throw InspError(ErrorCode::kInvalidRequirement,
                      "negative requirement " + req.s + "-" + req.t);
    }
    if (!seen.insert(MakePair(*s, *t)).second) {
      throw InspError(ErrorCode::kDuplicateRequirement,
                      "requirement " + req.s + "-" + req.t);
    }
    matrix.Set(*s, *t, req.r);
  }
  return Instance(std::move(tree), std::move(terminal_ids), std::move(matrix));
}

Rational TreeDistance(const MetricTree& tree, NodeId i, NodeId j) {
  return tree.Distance(i, j);
}

std::vector<NodeId> CutSide(const Instance& instance, EdgeId e) {
  const MetricTree& tree = instance.tree();
  tree.edge(e);
  std::vector<NodeId> side;
  for (NodeId t : instance.terminals()) {
    if (!tree.BelowEdge(e, t)) side.push_back(t);
  }
  std::sort(side.begin(), side.end());
  return side;
}

std::int64_t CutRequirement(const Instance& instance,
                            std::span<const NodeId> side) {
  const int n = instance.tree().num_nodes();
  std::vector<char> inside(n, 0);
  int count = 0;
  for (NodeId v : side) {
    if (v < 0 || v >= n || !instance.IsTerminal(v)) {
      throw InspError(ErrorCode::kUnknownNode,
                      "cut member " + std::to_string(v) + " is not a terminal");
    }
    if (!inside[v]) ++count;
    inside[v] = 1;
  }
  if (count == 0 || count == instance.num_terminals()) {
    throw InspError(ErrorCode::kEmptyOrFullCut, "R(X) needs 0 < |X| < |V|");
  }
  std::int64_t best = 0;
  for (NodeId i : instance.terminals()) {
    if (!inside[i]) continue;
    for (NodeId j : instance.terminals()) {
      if (!inside[j]) best = std::max(best, instance.Requirement(i, j));
    }
  }
  return best;
}

EdgeCapacity BaseCapacity(const Instance& instance) {
  EdgeCapacity c;
  c.values.reserve(instance.tree().num_edges());
  for (EdgeId e = 0; e < instance.tree().num_edges(); ++e) {
    c.values.push_back(CutRequirement(instance, CutSide(instance, e)));
  }
  return c;
}

Rational RealizationCost(const Instance& instance, const Realization& y) {
  Rational total(0);
  const int n = instance.tree().num_nodes();
  for (const auto& [pair, value] : y.entries()) {
    const auto [i, j] = pair;
    if (i < 0 || j >= n || i == j || !instance.IsTerminal(i) ||
        !instance.IsTerminal(j)) {
      throw InspError(ErrorCode::kUnknownTerminalPair,
                      "realization entry " + std::to_string(i) + "-" +
                          std::to_string(j));
    }
    total += instance.tree().Distance(i, j) * value;
  }
  return total;
}

Rational CapacityCost(const MetricTree& tree, const EdgeCapacity& c) {
  Rational total(0);
  for (EdgeId e = 0; e < tree.num_edges(); ++e) {
    total += tree.edge(e).length * c[e];
  }
  return total;
}

}  // namespace insp
