#include "insp/solver.h"

#include <algorithm>

#include "gtest/gtest.h"
#include "insp/verify.h"
#include "test_util.h"

namespace insp {
namespace {

using ::insp::testing::Id;

Instance PathAmB() {
  return BuildInstance({"a", "b"}, {"a", "m", "b"},
                       {{"a", "m", Rational(1)}, {"m", "b", Rational(1)}},
                       {{"a", "b", 2}});
}

Instance SingleEdge(std::int64_t r) {
  return BuildInstance({"a", "b"}, {"a", "b"}, {{"a", "b", Rational(1)}},
                       {{"a", "b", r}});
}

TEST(CheckPreconditionsTest, TwinTrianglesViolatesAtUV) {
  const Instance twins = testing::TwinTriangles();
  const PreconditionReport report = CheckPreconditions(twins);
  ASSERT_EQ(report.violations.size(), 1u);
  const TreeEdge& e = twins.tree().edge(report.violations[0].edge);
  EXPECT_EQ(twins.tree().name(e.u), "u");
  EXPECT_EQ(twins.tree().name(e.v), "v");
  EXPECT_EQ(report.violations[0].cut_requirement, 0);
}

TEST(CheckPreconditionsTest, Examples) {
  EXPECT_TRUE(CheckPreconditions(testing::UniformStar({"a", "b", "c"}, 2)).ok());
  const PreconditionReport one = CheckPreconditions(SingleEdge(1));
  ASSERT_EQ(one.violations.size(), 1u);
  EXPECT_EQ(one.violations[0].cut_requirement, 1);
}

TEST(OptimalCostFormulaTest, Examples) {
  EXPECT_EQ(OptimalCostFormula(testing::UniformStar({"a", "b", "c"}, 2)),
            Rational(3));
  EXPECT_EQ(OptimalCostFormula(testing::UniformStar({"a", "b", "c"}, 3)),
            Rational(5));
  EXPECT_EQ(OptimalCostFormula(PathAmB()), Rational(4));
  // The exhaustive oracle agrees on all three.
  for (const Instance& instance :
       {testing::UniformStar({"a", "b", "c"}, 2),
        testing::UniformStar({"a", "b", "c"}, 3), PathAmB()}) {
    const auto best = BruteForceInsp(instance);
    ASSERT_TRUE(best.has_value());
    EXPECT_EQ(RealizationCost(instance, *best), OptimalCostFormula(instance));
  }
}

TEST(OptimalCostFormulaTest, ThrowsOnViolation) {
  EXPECT_THROW(OptimalCostFormula(testing::TwinTriangles()), PreconditionError);
}

TEST(SolveTest, UniformStarTriangle) {
  const Instance star = testing::UniformStar({"a", "b", "c"}, 2);
  const Solution solution = Solve(star);
  EXPECT_EQ(solution.cost, Rational(3));
  EXPECT_EQ(solution.formula_cost, Rational(3));
  EXPECT_TRUE(solution.join.edges.empty());
  EXPECT_EQ(solution.realization.entries().size(), 3u);
  for (const auto& [pair, value] : solution.realization.entries()) {
    EXPECT_EQ(value, 1);
  }
}

TEST(SolveTest, MixedStar) {
  // r(a,c) = 3 makes R(c) = 3, so the sum of R(u) is 9 and the optimum is 5.
  const Instance star = testing::Star(
      {"a", "b", "c"}, {{"a", "b", 3}, {"a", "c", 3}, {"b", "c", 2}});
  const Solution solution = Solve(star);
  EXPECT_EQ(solution.cost, Rational(5));
  EXPECT_EQ(solution.join.edges.size(), 1u);
  EXPECT_TRUE(VerifyRealization(star, solution.realization).ok());
  const auto oracle = BruteForceInsp(star);
  ASSERT_TRUE(oracle.has_value());
  EXPECT_EQ(RealizationCost(star, *oracle), Rational(5));

  // The split-off (a,b)=2, (a,c)=1, (b,c)=1 of cost 4 is not a realization.
  Realization cheaper;
  cheaper.Set(Id(star, "a"), Id(star, "b"), 2);
  cheaper.Set(Id(star, "a"), Id(star, "c"), 1);
  cheaper.Set(Id(star, "b"), Id(star, "c"), 1);
  EXPECT_FALSE(VerifyRealization(star, cheaper).ok());
}

TEST(SolveTest, SingleEdge) {
  const Instance instance = SingleEdge(2);
  const Solution solution = Solve(instance);
  EXPECT_EQ(solution.realization.Get(0, 1), 2);
  EXPECT_EQ(solution.cost, Rational(2));
}

TEST(SolveTest, SingleTerminal) {
  const Solution solution = Solve(BuildInstance({"a"}, {"a"}, {}, {}));
  EXPECT_TRUE(solution.realization.empty());
  EXPECT_EQ(solution.cost, Rational(0));
}

TEST(SolveTest, RejectsTwinTrianglesWithReport) {
  try {
    Solve(testing::TwinTriangles());
    FAIL();
  } catch (const PreconditionError& error) {
    EXPECT_EQ(error.code(), ErrorCode::kPreconditionViolated);
    EXPECT_EQ(error.report().violations.size(), 1u);
  }
}

TEST(SolveTest, DeterministicAcrossRuns) {
  const Instance instance =
      GenerateInstance({.terminals = 7, .inner = 3, .rmax = 6, .seed = 17});
  EXPECT_EQ(Solve(instance).realization, Solve(instance).realization);
}

// Solution invariants on random instances: c is r-feasible, the realization
// is feasible, its cost equals the formula, and projecting it back to the
// tree gives an r-feasible capacity of the same cost.
TEST(SolveTest, InvariantsOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const Instance instance = GenerateInstance(
        {.terminals = 2 + static_cast<int>(seed % 7),
         .inner = static_cast<int>(seed % 5),
         .rmin = 2,
         .rmax = 6,
         .seed = seed});
    const Solution solution = Solve(instance);
    EXPECT_TRUE(VerifyFeasibleCapacity(instance, solution.capacity).ok());
    EXPECT_TRUE(VerifyRealization(instance, solution.realization).ok());
    EXPECT_EQ(solution.cost, RealizationCost(instance, solution.realization));
    EXPECT_EQ(solution.cost, solution.formula_cost);
    EXPECT_LE(solution.cost, CapacityCost(instance.tree(), solution.capacity));

    const EdgeCapacity projected = ProjectToTree(instance, solution.realization);
    EXPECT_TRUE(VerifyFeasibleCapacity(instance, projected).ok());
    EXPECT_EQ(CapacityCost(instance.tree(), projected), solution.cost);
  }
}

// Minimum r-feasible capacity by enumerating c in [c^R, c^R + 1] per edge.
Rational BruteMinFeasibleCapacityCost(const Instance& instance) {
  const EdgeCapacity base = BaseCapacity(instance);
  const int m = instance.tree().num_edges();
  std::optional<Rational> best;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    EdgeCapacity c = base;
    for (int e = 0; e < m; ++e) c[e] += (mask >> e) & 1u;
    if (!VerifyFeasibleCapacity(instance, c).ok()) continue;
    const Rational cost = CapacityCost(instance.tree(), c);
    if (!best || cost < *best) best = cost;
  }
  return *best;
}

TEST(SolveTest, IntegerOptimumEqualsFeasibleCapacityOptimum) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance instance = GenerateInstance(
        {.terminals = 2 + static_cast<int>(seed % 4),
         .inner = static_cast<int>(seed % 3),
         .rmin = 2,
         .rmax = 3,
         .seed = seed});
    const auto oracle = BruteForceInsp(instance);
    ASSERT_TRUE(oracle.has_value());
    const Rational integer_optimum = RealizationCost(instance, *oracle);
    EXPECT_EQ(integer_optimum, BruteMinFeasibleCapacityCost(instance));
    EXPECT_EQ(integer_optimum, OptimalCostFormula(instance));
    EXPECT_EQ(integer_optimum, Solve(instance).cost);
  }
}

}  // namespace
}  // namespace insp
