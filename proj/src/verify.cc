#include "insp/verify.h"

#include <algorithm>
#include <string>

#include "insp/error.h"

namespace insp {

CapacitatedMultigraph RealizationGraph(const Instance& instance,
                                       const Realization& y) {
  CapacitatedMultigraph g(instance.tree().names());
  for (const auto& [pair, value] : y.entries()) {
    if (!instance.IsTerminal(pair.first) || !instance.IsTerminal(pair.second)) {
      throw InspError(ErrorCode::kUnknownTerminalPair,
                      "realization entry on a non-terminal");
    }
    g.SetCapacity(pair.first, pair.second, value);
  }
  return g;
}

RealizationReport VerifyRealization(const Instance& instance,
                                    const Realization& y) {
  const CapacitatedMultigraph g = RealizationGraph(instance, y);
  RealizationReport report;
  const auto& terminals = instance.terminals();
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    for (std::size_t j = i + 1; j < terminals.size(); ++j) {
      const std::int64_t need = instance.Requirement(terminals[i], terminals[j]);
      if (need == 0) continue;
      const std::int64_t got = MaxFlow(g, terminals[i], terminals[j]);
      if (got < need) report.deficits.push_back({terminals[i], terminals[j], need, got});
    }
  }
  return report;
}

CapacityReport VerifyFeasibleCapacity(const Instance& instance,
                                      const EdgeCapacity& c) {
  const MetricTree& tree = instance.tree();
  if (static_cast<int>(c.values.size()) != tree.num_edges()) {
    throw InspError(ErrorCode::kUnknownEdge,
                    "capacity is not keyed by the tree's edges");
  }
  CapacityReport report;
  for (NodeId v = 0; v < tree.num_nodes(); ++v) {
    if (instance.IsTerminal(v)) continue;
    std::int64_t load = 0;
    for (const auto& [neighbor, e] : tree.incident(v)) load += c[e];
    if (load % 2 != 0) report.odd_inner_nodes.push_back(v);
  }
  const EdgeCapacity base = BaseCapacity(instance);
  for (EdgeId e = 0; e < tree.num_edges(); ++e) {
    if (c[e] < base[e]) report.short_edges.push_back(e);
  }
  return report;
}

Rational FractionalLowerBound(const Instance& instance) {
  return CapacityCost(instance.tree(), BaseCapacity(instance));
}

Rational UniformIntegerFormula(std::span<const std::int64_t> cut_values) {
  std::int64_t sum = 0;
  for (std::int64_t value : cut_values) {
    if (value == 1) {
      throw InspError(ErrorCode::kValueOne,
                      "formula requires R(u) != 1 for every terminal");
    }
    sum += value;
  }
  return Rational((sum + 1) / 2);
}

EdgeCapacity ProjectToTree(const Instance& instance, const Realization& y) {
  const MetricTree& tree = instance.tree();
  EdgeCapacity c{std::vector<std::int64_t>(tree.num_edges(), 0)};
  for (EdgeId e = 0; e < tree.num_edges(); ++e) {
    for (const auto& [pair, value] : y.entries()) {
      if (tree.BelowEdge(e, pair.first) != tree.BelowEdge(e, pair.second)) {
        c[e] += value;
      }
    }
  }
  return c;
}

std::optional<Realization> BruteForceInsp(
    const Instance& instance, std::optional<std::int64_t> per_edge_bound) {
  const int k = instance.num_terminals();
  const std::int64_t max_r = instance.MaxRequirement();
  const std::int64_t bound = per_edge_bound.value_or(max_r);
  if (k > kBruteForceMaxTerminals) {
    throw InspError(ErrorCode::kTooLarge,
                    std::to_string(k) + " terminals exceed the oracle guard");
  }
  if (bound < 0 || bound > max_r) {
    throw InspError(ErrorCode::kTooLarge,
                    "per-edge bound must lie in [0, max r]");
  }
  const auto& terminals = instance.terminals();

  struct Slot {
    int a;
    int b;
    Rational distance;
  };
  std::vector<Slot> slots;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      slots.push_back(
          {i, j, instance.tree().Distance(terminals[i], terminals[j])});
    }
  }
  // Cuts X containing terminal 0, as bitmasks over terminal positions.
  struct Cut {
    unsigned mask;
    std::int64_t requirement;
    std::vector<int> crossing;  // slot indices
  };
  std::vector<Cut> cuts;
  for (unsigned mask = 1; mask < (1u << k) - 1; mask += 2) {
    Cut cut{mask, 0, {}};
    for (int s = 0; s < static_cast<int>(slots.size()); ++s) {
      const bool in_a = (mask >> slots[s].a) & 1u;
      const bool in_b = (mask >> slots[s].b) & 1u;
      if (in_a != in_b) {
        cut.crossing.push_back(s);
        cut.requirement =
            std::max(cut.requirement,
                     instance.Requirement(terminals[slots[s].a],
                                          terminals[slots[s].b]));
      }
    }
    cuts.push_back(std::move(cut));
  }

  const int num_slots = static_cast<int>(slots.size());
  std::vector<std::int64_t> value(num_slots, 0);
  std::optional<std::vector<std::int64_t>> best;
  Rational best_cost;

  // Each cut is feasible only if current capacity plus the maximum possible
  // from still-unassigned slots reaches its requirement.
  auto can_still_cover = [&](int assigned) {
    for (const Cut& cut : cuts) {
      std::int64_t reach = 0;
      for (int s : cut.crossing) reach += s < assigned ? value[s] : bound;
      if (reach < cut.requirement) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, int slot, const Rational& cost) -> void {
    if (best && cost >= best_cost) return;
    if (!can_still_cover(slot)) return;
    if (slot == num_slots) {
      best = value;
      best_cost = cost;
      return;
    }
    for (std::int64_t v = 0; v <= bound; ++v) {
      value[slot] = v;
      self(self, slot + 1, cost + slots[slot].distance * v);
    }
    value[slot] = 0;
  };
  search(search, 0, Rational(0));

  if (!best) return std::nullopt;
  Realization y;
  for (int s = 0; s < num_slots; ++s) {
    y.Set(terminals[slots[s].a], terminals[slots[s].b], (*best)[s]);
  }
  return y;
}

}  // namespace insp
