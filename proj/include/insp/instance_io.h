#ifndef INSP_INSTANCE_IO_H_
#define INSP_INSTANCE_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "insp/join.h"
#include "insp/model.h"
#include "insp/solver.h"

namespace insp {

inline constexpr std::string_view kFormatVersion = "INSP-JSON v1";

// INSP-JSON v1:
//   {"version": "INSP-JSON v1",
//    "terminals": ["a", ...],
//    "tree": {"nodes": ["a", "s", ...],
//             "edges": [{"u": "a", "v": "s", "length": "0.5"}, ...]},
//    "requirements": [{"s": "a", "t": "b", "r": 2}, ...]}
// Lengths are strings ("2", "0.5", "7/3") or JSON integers. Unknown fields
// are rejected. Throws InspError(kParseError) or any BuildInstance error.
Instance ParseInstance(std::string_view text);
Instance InstanceFromJson(const nlohmann::json& doc);

// Canonical document; ParseInstance(PrintInstance(x)) == x.
nlohmann::json InstanceToJson(const Instance& instance);
std::string PrintInstance(const Instance& instance);

// FNV-1a 64 of the canonical document, as 16 hex digits.
std::string InstanceHash(const Instance& instance);

// Positive entries as [{"s", "t", "y"}], sorted by (name(s), name(t)) with
// name(s) < name(t).
nlohmann::json RealizationToJson(const Instance& instance,
                                 const Realization& y);

struct RealizationDocument {
  Realization realization;
  std::optional<std::string> instance_hash;
};

// Accepts any object carrying a "realization" array (a result document
// qualifies) and an optional "instance_hash".
RealizationDocument ParseRealization(std::string_view text,
                                     const Instance& instance);

nlohmann::json JoinToJson(const MetricTree& tree, const JoinResult& join);

// {status, cost, formula_cost, capacity, join, realization, instance_hash}.
nlohmann::json SolutionToJson(const Instance& instance,
                              const Solution& solution);

}  // namespace insp

#endif  // INSP_INSTANCE_IO_H_
