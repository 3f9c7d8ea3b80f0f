#ifndef INSP_MAXFLOW_H_
#define INSP_MAXFLOW_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "insp/model.h"

namespace insp {

// Undirected graph with integer capacities z(u, v) stored densely. Loops are
// not stored: they carry no flow and cost nothing.
class CapacitatedMultigraph {
 public:
  CapacitatedMultigraph() = default;
  explicit CapacitatedMultigraph(std::vector<std::string> names);

  int num_nodes() const { return static_cast<int>(names_.size()); }
  const std::string& name(NodeId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  std::int64_t Capacity(NodeId u, NodeId v) const {
    return u == v ? 0 : z_[Index(u, v)];
  }
  // Sets z(u, v); writes to the diagonal are dropped.
  void SetCapacity(NodeId u, NodeId v, std::int64_t value);
  void AddCapacity(NodeId u, NodeId v, std::int64_t delta) {
    if (u != v) SetCapacity(u, v, Capacity(u, v) + delta);
  }

  // z(delta(v)).
  std::int64_t Degree(NodeId v) const;
  // Nodes w with z(v, w) > 0, ascending id.
  std::vector<NodeId> Neighbors(NodeId v) const;

  friend bool operator==(const CapacitatedMultigraph&,
                         const CapacitatedMultigraph&) = default;

 private:
  std::size_t Index(NodeId u, NodeId v) const {
    return static_cast<std::size_t>(u) * names_.size() + v;
  }

  std::vector<std::string> names_;
  std::vector<std::int64_t> z_;
};

// Exact s-t max-flow value (equivalently the min s-t cut) by Dinic's
// algorithm on the dense residual matrix.
// Errors: kUnknownNode, kSameNode.
std::int64_t MaxFlow(const CapacitatedMultigraph& g, NodeId s, NodeId t);

using DemandMap = std::map<NodePair, std::int64_t>;

// lambda(x, y) for every pair of positive-degree nodes other than `exclude`.
DemandMap ConnectivitySnapshot(const CapacitatedMultigraph& g, NodeId exclude);

}  // namespace insp

#endif  // INSP_MAXFLOW_H_
