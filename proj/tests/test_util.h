#ifndef INSP_TESTS_TEST_UTIL_H_
#define INSP_TESTS_TEST_UTIL_H_

// Fixtures and brute-force oracles shared by the unit tests. Nothing here
// calls into the code paths it is used to check.

#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "insp/generator.h"
#include "insp/maxflow.h"
#include "insp/model.h"

namespace insp::testing {

inline std::string DataPath(const std::string& name) {
  return std::string(INSP_TEST_DATA_DIR) + "/" + name;
}

inline std::string ReadData(const std::string& name) {
  std::ifstream in(DataPath(name));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Two triangles of requirement 3 hanging off u and v, joined by uv.
inline Instance TwinTriangles() {
  std::vector<std::string> terminals = {"u1", "u2", "u3", "v1", "v2", "v3"};
  std::vector<std::string> nodes = terminals;
  nodes.push_back("u");
  nodes.push_back("v");
  std::vector<NamedEdge> edges = {{"u", "v", Rational(1)}};
  for (int i = 1; i <= 3; ++i) {
    edges.push_back({"u", "u" + std::to_string(i), Rational(2)});
  }
  for (int i = 1; i <= 3; ++i) {
    edges.push_back({"v", "v" + std::to_string(i), Rational(2)});
  }
  std::vector<RequirementTriple> reqs;
  for (const char* group : {"u", "v"}) {
    for (int i = 1; i <= 3; ++i) {
      for (int j = i + 1; j <= 3; ++j) {
        reqs.push_back({group + std::to_string(i), group + std::to_string(j), 3});
      }
    }
  }
  return BuildInstance(terminals, nodes, edges, reqs);
}

// Star with center "s" and the given leaves, every edge of `length`.
inline Instance Star(const std::vector<std::string>& leaves,
                     const std::vector<RequirementTriple>& reqs,
                     Rational length = Rational(1, 2)) {
  std::vector<std::string> nodes = leaves;
  nodes.push_back("s");
  std::vector<NamedEdge> edges;
  for (const std::string& leaf : leaves) edges.push_back({"s", leaf, length});
  return BuildInstance(leaves, nodes, edges, reqs);
}

inline Instance UniformStar(const std::vector<std::string>& leaves,
                            std::int64_t r, Rational length = Rational(1, 2)) {
  std::vector<RequirementTriple> reqs;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      reqs.push_back({leaves[i], leaves[j], r});
    }
  }
  return Star(leaves, reqs, length);
}

inline NodeId Id(const Instance& instance, const std::string& name) {
  return instance.tree().FindNode(name);
}

// Distances by Floyd-Warshall over the tree edges.
inline std::vector<std::vector<Rational>> FloydDistances(const MetricTree& t) {
  const int n = t.num_nodes();
  const Rational inf(std::numeric_limits<std::int32_t>::max());
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const TreeEdge& e : t.edges()) {
    d[e.u][e.v] = e.length;
    d[e.v][e.u] = e.length;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

// Minimum s-t cut by enumerating every node bipartition.
inline std::int64_t BruteMinCut(const CapacitatedMultigraph& g, NodeId s,
                                NodeId t) {
  const int n = g.num_nodes();
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!((mask >> s) & 1u) || ((mask >> t) & 1u)) continue;
    std::int64_t cut = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (((mask >> u) & 1u) != ((mask >> v) & 1u)) cut += g.Capacity(u, v);
      }
    }
    best = std::min(best, cut);
  }
  return best;
}

// Random tree on n nodes named "n0".."n{n-1}" with lengths from `palette`.
inline MetricTree RandomTree(SplitMix64& rng, int n,
                             const std::vector<Rational>& palette) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("n" + std::to_string(i));
  std::vector<TreeEdge> edges;
  for (int i = 1; i < n; ++i) {
    edges.push_back({i, static_cast<NodeId>(rng.Below(i)),
                     palette[rng.Below(palette.size())]});
  }
  return MetricTree(std::move(names), std::move(edges), 0);
}

}  // namespace insp::testing

#endif  // INSP_TESTS_TEST_UTIL_H_
