#ifndef INSP_GENERATOR_H_
#define INSP_GENERATOR_H_

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "insp/model.h"

namespace insp {

// SplitMix64. Bounded draws use rejection sampling so the stream of values is
// identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t Next();
  // Uniform in [0, n); n > 0.
  std::uint64_t Below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

struct GeneratorOptions {
  int terminals = 4;
  int inner = 1;
  std::int64_t rmin = 2;
  std::int64_t rmax = 4;
  std::uint64_t seed = 1;
  std::vector<Rational> lengths = {Rational(0), Rational(1, 2), Rational(1),
                                   Rational(2), Rational(7, 3)};
};

// Random INSP-JSON v1 document. Terminals are "t1".."tk", inner nodes
// "s1".."sm".
//
// With m = 0 the tree is a random recursive tree on the terminals: t(i+1)
// attaches to t(Below(i) + 1). Otherwise s(j+1) attaches to s(Below(j) + 1),
// then terminals in order first top up inner nodes of inner-tree degree < 2
// (in index order, until each has degree 2) and the rest attach to
// s(Below(m) + 1). Each edge draws its length from the palette right after
// its endpoint is chosen. Requirements are drawn last for every terminal pair
// i < j as rmin + Below(rmax - rmin + 1).
nlohmann::json GenerateInstanceDocument(const GeneratorOptions& options);

Instance GenerateInstance(const GeneratorOptions& options);

}  // namespace insp

#endif  // INSP_GENERATOR_H_
