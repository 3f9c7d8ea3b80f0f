#include "insp/generator.h"

#include <string>

#include "insp/error.h"
#include "insp/instance_io.h"

namespace insp {

std::uint64_t SplitMix64::Next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::Below(std::uint64_t n) {
  // Largest multiple of n that fits, expressed without overflow.
  const std::uint64_t reject_from = 0 - ((0 - n) % n);
  while (true) {
    const std::uint64_t x = Next();
    if (reject_from == 0 || x < reject_from) return x % n;
  }
}

nlohmann::json GenerateInstanceDocument(const GeneratorOptions& options) {
  if (options.terminals < 1 || options.inner < 0) {
    throw InspError(ErrorCode::kParseError,
                    "need at least one terminal and a nonnegative inner count");
  }
  if (options.rmin < 0 || options.rmin > options.rmax) {
    throw InspError(ErrorCode::kParseError, "need 0 <= rmin <= rmax");
  }
  if (options.lengths.empty()) {
    throw InspError(ErrorCode::kParseError, "empty length palette");
  }
  SplitMix64 rng(options.seed);
  const int k = options.terminals;
  const int m = options.inner;
  auto terminal = [](int i) { return "t" + std::to_string(i + 1); };
  auto inner = [](int j) { return "s" + std::to_string(j + 1); };

  nlohmann::json edges = nlohmann::json::array();
  auto add_edge = [&](const std::string& u, const std::string& v) {
    const Rational& length = options.lengths[rng.Below(options.lengths.size())];
    edges.push_back({{"u", u}, {"v", v}, {"length", FormatRational(length)}});
  };

  if (m == 0) {
    for (int i = 1; i < k; ++i) add_edge(terminal(i), terminal(rng.Below(i)));
  } else {
    std::vector<int> degree(m, 0);
    for (int j = 1; j < m; ++j) {
      const int parent = static_cast<int>(rng.Below(j));
      add_edge(inner(j), inner(parent));
      ++degree[j];
      ++degree[parent];
    }
    int next = 0;
    for (int j = 0; j < m && next < k; ++j) {
      while (degree[j] < 2 && next < k) {
        add_edge(terminal(next++), inner(j));
        ++degree[j];
      }
    }
    for (; next < k; ++next) {
      add_edge(terminal(next), inner(static_cast<int>(rng.Below(m))));
    }
  }

  nlohmann::json terminals = nlohmann::json::array();
  nlohmann::json nodes = nlohmann::json::array();
  for (int i = 0; i < k; ++i) {
    terminals.push_back(terminal(i));
    nodes.push_back(terminal(i));
  }
  for (int j = 0; j < m; ++j) nodes.push_back(inner(j));

  nlohmann::json requirements = nlohmann::json::array();
  const auto span = static_cast<std::uint64_t>(options.rmax - options.rmin + 1);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      requirements.push_back(
          {{"s", terminal(i)},
           {"t", terminal(j)},
           {"r", options.rmin + static_cast<std::int64_t>(rng.Below(span))}});
    }
  }

  nlohmann::json doc;
  doc["version"] = kFormatVersion;
  doc["terminals"] = std::move(terminals);
  doc["tree"] = {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  doc["requirements"] = std::move(requirements);
  return doc;
}

Instance GenerateInstance(const GeneratorOptions& options) {
  return InstanceFromJson(GenerateInstanceDocument(options));
}

}  // namespace insp
