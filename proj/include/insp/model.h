#ifndef INSP_MODEL_H_
#define INSP_MODEL_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "insp/rational.h"

namespace insp {

// Dense index into MetricTree::nodes(). Terminals and inner nodes share one
// index space.
using NodeId = int;
using EdgeId = int;

struct TreeEdge {
  NodeId u = 0;
  NodeId v = 0;
  Rational length;
};

// A weighted tree whose path lengths define the edge cost between terminals.
// Cuts are oriented by a distinguished root terminal: X_e is the root side of
// edge e.
class MetricTree {
 public:
  // Validates shape (connected, acyclic, lengths >= 0). `root` must index
  // into `names`.
  MetricTree(std::vector<std::string> names, std::vector<TreeEdge> edges,
             NodeId root);

  int num_nodes() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  NodeId root() const { return root_; }

  const std::string& name(NodeId node) const;
  const std::vector<std::string>& names() const { return names_; }
  // Throws kUnknownNode.
  NodeId FindNode(const std::string& name) const;
  std::optional<NodeId> LookupNode(const std::string& name) const;

  const TreeEdge& edge(EdgeId e) const;
  const std::vector<TreeEdge>& edges() const { return edges_; }
  // Returns the edge joining u and v, if any.
  std::optional<EdgeId> FindEdge(NodeId u, NodeId v) const;

  // (neighbor, edge) pairs in input edge order.
  const std::vector<std::pair<NodeId, EdgeId>>& incident(NodeId node) const;
  int degree(NodeId node) const {
    return static_cast<int>(incident(node).size());
  }

  // Length of the unique node-to-node path. Throws kUnknownNode.
  Rational Distance(NodeId i, NodeId j) const;

  // Endpoint of `e` farther from the root.
  NodeId ChildSide(EdgeId e) const;
  // True iff `node` lies in the component of T - e not containing the root.
  bool BelowEdge(EdgeId e, NodeId node) const;

 private:
  void CheckNode(NodeId node) const;

  std::vector<std::string> names_;
  std::map<std::string, NodeId> index_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<std::pair<NodeId, EdgeId>>> incident_;
  NodeId root_ = 0;

  // Rooted traversal data.
  std::vector<NodeId> child_of_edge_;
  std::vector<int> enter_;
  std::vector<int> leave_;
  std::vector<Rational> distances_;  // num_nodes x num_nodes
};

// Symmetric integer requirement r on unordered terminal pairs. Pairs never
// set read as 0; the diagonal is ignored.
class RequirementMatrix {
 public:
  RequirementMatrix() = default;
  explicit RequirementMatrix(int num_nodes)
      : num_nodes_(num_nodes),
        values_(static_cast<std::size_t>(num_nodes) * num_nodes, 0) {}

  std::int64_t Get(NodeId s, NodeId t) const {
    if (s == t) return 0;
    return values_[static_cast<std::size_t>(s) * num_nodes_ + t];
  }
  void Set(NodeId s, NodeId t, std::int64_t r) {
    values_[static_cast<std::size_t>(s) * num_nodes_ + t] = r;
    values_[static_cast<std::size_t>(t) * num_nodes_ + s] = r;
  }

  friend bool operator==(const RequirementMatrix&,
                         const RequirementMatrix&) = default;

 private:
  int num_nodes_ = 0;
  std::vector<std::int64_t> values_;
};

// Integer capacity on tree edges, indexed by EdgeId.
struct EdgeCapacity {
  std::vector<std::int64_t> values;

  std::int64_t operator[](EdgeId e) const { return values[e]; }
  std::int64_t& operator[](EdgeId e) { return values[e]; }
  friend bool operator==(const EdgeCapacity&, const EdgeCapacity&) = default;
};

// Unordered node pair with first < second.
using NodePair = std::pair<NodeId, NodeId>;
inline NodePair MakePair(NodeId a, NodeId b) {
  return a < b ? NodePair{a, b} : NodePair{b, a};
}

// Integer capacity on terminal pairs. Only positive entries are stored.
class Realization {
 public:
  std::int64_t Get(NodeId s, NodeId t) const;
  // Setting 0 erases the entry.
  void Set(NodeId s, NodeId t, std::int64_t value);
  void Add(NodeId s, NodeId t, std::int64_t delta) { Set(s, t, Get(s, t) + delta); }

  const std::map<NodePair, std::int64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const Realization&, const Realization&) = default;

 private:
  std::map<NodePair, std::int64_t> entries_;
};

struct RequirementTriple {
  std::string s;
  std::string t;
  std::int64_t r = 0;
};

struct NamedEdge {
  std::string u;
  std::string v;
  Rational length;
};

class Instance {
 public:
  Instance(MetricTree tree, std::vector<NodeId> terminals,
           RequirementMatrix requirements);

  const MetricTree& tree() const { return tree_; }
  // Terminal node ids in input order; terminals().front() is the root.
  const std::vector<NodeId>& terminals() const { return terminals_; }
  int num_terminals() const { return static_cast<int>(terminals_.size()); }
  bool IsTerminal(NodeId node) const { return is_terminal_.at(node) != 0; }
  // Nodes of the tree that are not terminals, in ascending name order.
  std::vector<NodeId> InnerNodesByName() const;

  const RequirementMatrix& requirements() const { return requirements_; }
  std::int64_t Requirement(NodeId s, NodeId t) const {
    return requirements_.Get(s, t);
  }
  std::int64_t MaxRequirement() const;

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  MetricTree tree_;
  std::vector<NodeId> terminals_;
  std::vector<char> is_terminal_;
  RequirementMatrix requirements_;
};

// Validates the raw description and returns an Instance. Non-terminal leaves
// are pruned repeatedly so every leaf of the stored tree is a terminal. The
// root is the first terminal.
//
// Errors: kNotATree, kNegativeLength, kTerminalNotInTree, kDuplicateNode,
// kEmptyTerminalSet, kUnknownNode, kDuplicateRequirement, kSelfRequirement,
// kInvalidRequirement, kUnknownTerminalPair.
Instance BuildInstance(const std::vector<std::string>& terminals,
                       const std::vector<std::string>& tree_nodes,
                       const std::vector<NamedEdge>& tree_edges,
                       const std::vector<RequirementTriple>& requirements);

// Path length between two tree nodes.
Rational TreeDistance(const MetricTree& tree, NodeId i, NodeId j);

// X_e: terminals reachable from the root without crossing `e`, ascending ids.
std::vector<NodeId> CutSide(const Instance& instance, EdgeId e);

// R(X) = max r(i, j) over i in X, j outside X. X is a set of terminals.
// Throws kEmptyOrFullCut when X is empty or all of V, kUnknownNode when X
// holds a non-terminal.
std::int64_t CutRequirement(const Instance& instance,
                            std::span<const NodeId> side);

// c^R(e) = R(X_e) for every tree edge.
EdgeCapacity BaseCapacity(const Instance& instance);

// Sum of a(ij) y(ij).
Rational RealizationCost(const Instance& instance, const Realization& y);

// Sum of l(e) c(e).
Rational CapacityCost(const MetricTree& tree, const EdgeCapacity& c);

}  // namespace insp

#endif  // INSP_MODEL_H_
