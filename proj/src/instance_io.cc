#include "insp/instance_io.h"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "insp/error.h"

namespace insp {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw InspError(ErrorCode::kParseError, where + ": " + what);
}

void RejectUnknownFields(const json& object, const std::string& where,
                         std::initializer_list<std::string_view> allowed) {
  if (!object.is_object()) Fail(where, "expected an object");
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      Fail(where, "unknown field '" + key + "'");
    }
  }
}

const json& Field(const json& object, const std::string& where,
                  const std::string& key) {
  const auto it = object.find(key);
  if (it == object.end()) Fail(where, "missing field '" + key + "'");
  return *it;
}

std::string AsString(const json& value, const std::string& where) {
  if (!value.is_string()) Fail(where, "expected a string");
  return value.get<std::string>();
}

std::int64_t AsInteger(const json& value, const std::string& where) {
  if (!value.is_number_integer()) Fail(where, "expected an integer");
  return value.get<std::int64_t>();
}

std::vector<std::string> AsStringList(const json& value,
                                      const std::string& where) {
  if (!value.is_array()) Fail(where, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(AsString(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Rational AsLength(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (!value.is_string()) {
    Fail(where, "expected a decimal string or an integer");
  }
  try {
    return ParseRational(value.get<std::string>());
  } catch (const InspError& error) {
    Fail(where, error.what());
  }
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& error) {
    throw InspError(ErrorCode::kParseError, error.what());
  }
}

}  // namespace

Instance InstanceFromJson(const json& doc) {
  RejectUnknownFields(doc, "document",
                      {"version", "terminals", "tree", "requirements"});
  const json& version = Field(doc, "document", "version");
  if (AsString(version, "version") != kFormatVersion) {
    Fail("version", "unsupported version '" + version.get<std::string>() + "'");
  }
  const std::vector<std::string> terminals =
      AsStringList(Field(doc, "document", "terminals"), "terminals");

  const json& tree = Field(doc, "document", "tree");
  RejectUnknownFields(tree, "tree", {"nodes", "edges"});
  const std::vector<std::string> nodes =
      AsStringList(Field(tree, "tree", "nodes"), "tree.nodes");
  const json& edges = Field(tree, "tree", "edges");
  if (!edges.is_array()) Fail("tree.edges", "expected an array");
  std::vector<NamedEdge> named_edges;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "tree.edges[" + std::to_string(i) + "]";
    RejectUnknownFields(edges[i], where, {"u", "v", "length"});
    named_edges.push_back(
        {AsString(Field(edges[i], where, "u"), where + ".u"),
         AsString(Field(edges[i], where, "v"), where + ".v"),
         AsLength(Field(edges[i], where, "length"), where + ".length")});
  }

  std::vector<RequirementTriple> triples;
  const json& requirements = Field(doc, "document", "requirements");
  if (!requirements.is_array()) Fail("requirements", "expected an array");
  for (std::size_t i = 0; i < requirements.size(); ++i) {
    const std::string where = "requirements[" + std::to_string(i) + "]";
    RejectUnknownFields(requirements[i], where, {"s", "t", "r"});
    triples.push_back(
        {AsString(Field(requirements[i], where, "s"), where + ".s"),
         AsString(Field(requirements[i], where, "t"), where + ".t"),
         AsInteger(Field(requirements[i], where, "r"), where + ".r")});
  }
  return BuildInstance(terminals, nodes, named_edges, triples);
}

Instance ParseInstance(std::string_view text) {
  return InstanceFromJson(ParseJson(text));
}

json InstanceToJson(const Instance& instance) {
  const MetricTree& tree = instance.tree();
  json doc;
  doc["version"] = kFormatVersion;
  json terminals = json::array();
  for (NodeId t : instance.terminals()) terminals.push_back(tree.name(t));
  doc["terminals"] = std::move(terminals);
  json edges = json::array();
  for (const TreeEdge& e : tree.edges()) {
    edges.push_back({{"u", tree.name(e.u)},
                     {"v", tree.name(e.v)},
                     {"length", FormatRational(e.length)}});
  }
  doc["tree"] = {{"nodes", tree.names()}, {"edges", std::move(edges)}};
  json requirements = json::array();
  const auto& ts = instance.terminals();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      if (const std::int64_t r = instance.Requirement(ts[i], ts[j]); r > 0) {
        requirements.push_back(
            {{"s", tree.name(ts[i])}, {"t", tree.name(ts[j])}, {"r", r}});
      }
    }
  }
  doc["requirements"] = std::move(requirements);
  return doc;
}

std::string PrintInstance(const Instance& instance) {
  return InstanceToJson(instance).dump(2) + "\n";
}

std::string InstanceHash(const Instance& instance) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : InstanceToJson(instance).dump()) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

json RealizationToJson(const Instance& instance, const Realization& y) {
  const MetricTree& tree = instance.tree();
  std::vector<std::tuple<std::string, std::string, std::int64_t>> rows;
  for (const auto& [pair, value] : y.entries()) {
    std::string a = tree.name(pair.first);
    std::string b = tree.name(pair.second);
    if (b < a) std::swap(a, b);
    rows.emplace_back(std::move(a), std::move(b), value);
  }
  std::sort(rows.begin(), rows.end());
  json out = json::array();
  for (const auto& [s, t, value] : rows) {
    out.push_back({{"s", s}, {"t", t}, {"y", value}});
  }
  return out;
}

RealizationDocument ParseRealization(std::string_view text,
                                     const Instance& instance) {
  const json doc = ParseJson(text);
  if (!doc.is_object()) Fail("document", "expected an object");
  RealizationDocument out;
  if (const auto it = doc.find("instance_hash"); it != doc.end()) {
    out.instance_hash = AsString(*it, "instance_hash");
  }
  const json& entries = Field(doc, "document", "realization");
  if (!entries.is_array()) Fail("realization", "expected an array");
  const MetricTree& tree = instance.tree();
  std::set<NodePair> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "realization[" + std::to_string(i) + "]";
    RejectUnknownFields(entries[i], where, {"s", "t", "y"});
    const std::string s = AsString(Field(entries[i], where, "s"), where + ".s");
    const std::string t = AsString(Field(entries[i], where, "t"), where + ".t");
    const std::int64_t value =
        AsInteger(Field(entries[i], where, "y"), where + ".y");
    const auto sid = tree.LookupNode(s);
    const auto tid = tree.LookupNode(t);
    if (!sid || !tid || *sid == *tid || !instance.IsTerminal(*sid) ||
        !instance.IsTerminal(*tid)) {
      throw InspError(ErrorCode::kUnknownTerminalPair, where + ": " + s + "-" + t);
    }
    if (value < 0) Fail(where + ".y", "negative capacity");
    if (!seen.insert(MakePair(*sid, *tid)).second) {
      Fail(where, "duplicate pair " + s + "-" + t);
    }
    out.realization.Set(*sid, *tid, value);
  }
  return out;
}

json JoinToJson(const MetricTree& tree, const JoinResult& join) {
  json edges = json::array();
  for (EdgeId e : join.edges) {
    edges.push_back({{"u", tree.name(tree.edge(e).u)},
                     {"v", tree.name(tree.edge(e).v)},
                     {"length", FormatRational(tree.edge(e).length)}});
  }
  return {{"edges", std::move(edges)}, {"cost", FormatRational(join.cost)}};
}

json SolutionToJson(const Instance& instance, const Solution& solution) {
  const MetricTree& tree = instance.tree();
  json capacity = json::array();
  for (EdgeId e = 0; e < tree.num_edges(); ++e) {
    capacity.push_back({{"u", tree.name(tree.edge(e).u)},
                        {"v", tree.name(tree.edge(e).v)},
                        {"c", solution.capacity[e]}});
  }
  return {{"status", "ok"},
          {"cost", FormatRational(solution.cost)},
          {"formula_cost", FormatRational(solution.formula_cost)},
          {"capacity", std::move(capacity)},
          {"join", JoinToJson(tree, solution.join)},
          {"realization", RealizationToJson(instance, solution.realization)},
          {"instance_hash", InstanceHash(instance)}};
}

}  // namespace insp
