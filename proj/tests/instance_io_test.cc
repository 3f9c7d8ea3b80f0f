#include "insp/instance_io.h"

#include "gtest/gtest.h"
#include "insp/error.h"
#include "insp/generator.h"
#include "test_util.h"

namespace insp {
namespace {

ErrorCode ParseCode(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const InspError& error) {
    return error.code();
  }
  ADD_FAILURE() << "parse succeeded";
  return ErrorCode::kSolverInternalError;
}

std::string Doc(const std::string& edges, const std::string& reqs,
                const std::string& extra = "") {
  return R"({"version": "INSP-JSON v1", "terminals": ["a", "b"],
             "tree": {"nodes": ["a", "b"], "edges": )" +
         edges + R"(}, "requirements": )" + reqs + extra + "}";
}

TEST(RationalTest, ParseAndFormat) {
  EXPECT_EQ(ParseRational("0.5"), Rational(1, 2));
  EXPECT_EQ(ParseRational("7/3"), Rational(7, 3));
  EXPECT_EQ(ParseRational("12"), Rational(12));
  EXPECT_EQ(ParseRational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(ParseRational(".75"), Rational(3, 4));
  EXPECT_EQ(FormatRational(Rational(1, 2)), "0.5");
  EXPECT_EQ(FormatRational(Rational(7, 3)), "7/3");
  EXPECT_EQ(FormatRational(Rational(-3, 8)), "-0.375");
  EXPECT_EQ(FormatRational(Rational(41, 20)), "2.05");
  for (const char* bad : {"", "x", "1/0", "1.2.3", "1e3", "0x10", "/3"}) {
    EXPECT_THROW(ParseRational(bad), InspError) << bad;
  }
}

TEST(RationalTest, FormatRoundTrips) {
  SplitMix64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const Rational x(static_cast<std::int64_t>(rng.Below(2001)) - 1000,
                     1 + static_cast<std::int64_t>(rng.Below(400)));
    EXPECT_EQ(ParseRational(FormatRational(x)), x);
  }
}

TEST(ParseInstanceTest, TwinTrianglesFixture) {
  const Instance parsed = ParseInstance(testing::ReadData("twin_triangles.json"));
  EXPECT_EQ(parsed, testing::TwinTriangles());
}

TEST(ParseInstanceTest, EmptyRequirements) {
  const Instance instance =
      ParseInstance(Doc(R"([{"u": "a", "v": "b", "length": "1"}])", "[]"));
  EXPECT_EQ(instance.Requirement(0, 1), 0);
}

TEST(ParseInstanceTest, ExactDecimalLength) {
  const Instance instance = ParseInstance(
      Doc(R"([{"u": "a", "v": "b", "length": "0.5"}])", "[]"));
  EXPECT_EQ(instance.tree().edge(0).length, Rational(1, 2));
  const Instance integer =
      ParseInstance(Doc(R"([{"u": "a", "v": "b", "length": 3}])", "[]"));
  EXPECT_EQ(integer.tree().edge(0).length, Rational(3));
}

TEST(ParseInstanceTest, Errors) {
  EXPECT_EQ(ParseCode("{"), ErrorCode::kParseError);
  EXPECT_EQ(ParseCode(Doc(R"([{"u": "a", "v": "b", "length": 0.5}])", "[]")),
            ErrorCode::kParseError);
  EXPECT_EQ(ParseCode(Doc(R"([{"u": "a", "v": "b", "length": "1", "w": 1}])",
                          "[]")),
            ErrorCode::kParseError);
  EXPECT_EQ(ParseCode(Doc(R"([{"u": "a", "v": "b", "length": "1"}])", "[]",
                          R"(, "extra": true)")),
            ErrorCode::kParseError);
  EXPECT_EQ(ParseCode(Doc(R"([{"u": "a", "v": "b", "length": "-1"}])", "[]")),
            ErrorCode::kNegativeLength);
  EXPECT_EQ(ParseCode(Doc(R"([{"u": "a", "v": "b", "length": "1"}])",
                          R"([{"s": "a", "t": "b", "r": 2},
                              {"s": "b", "t": "a", "r": 2}])")),
            ErrorCode::kDuplicateRequirement);
  EXPECT_EQ(ParseCode(R"({"version": "INSP-JSON v2", "terminals": [],
                          "tree": {"nodes": [], "edges": []},
                          "requirements": []})"),
            ErrorCode::kParseError);
}

TEST(ParseInstanceTest, ErrorNamesTheField) {
  try {
    ParseInstance(Doc(R"([{"u": "a", "v": "b", "length": true}])", "[]"));
    FAIL();
  } catch (const InspError& error) {
    EXPECT_NE(std::string(error.what()).find("tree.edges[0].length"),
              std::string::npos);
  }
}

TEST(PrintInstanceTest, RoundTripsGeneratedInstances) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Instance instance = GenerateInstance(
        {.terminals = 1 + static_cast<int>(seed % 8),
         .inner = static_cast<int>(seed % 5),
         .rmin = 0,
         .rmax = 5,
         .seed = seed});
    const std::string text = PrintInstance(instance);
    const Instance again = ParseInstance(text);
    EXPECT_EQ(again, instance);
    EXPECT_EQ(PrintInstance(again), text);
    EXPECT_EQ(InstanceHash(again), InstanceHash(instance));
  }
}

TEST(InstanceHashTest, DetectsChanges) {
  const Instance a = testing::UniformStar({"a", "b", "c"}, 2);
  const Instance b = testing::UniformStar({"a", "b", "c"}, 3);
  EXPECT_NE(InstanceHash(a), InstanceHash(b));
  EXPECT_EQ(InstanceHash(a).size(), 16u);
}

TEST(RealizationDocumentTest, SortedPositiveEntries) {
  const Instance star = testing::UniformStar({"c", "b", "a"}, 2);
  Realization y;
  y.Set(testing::Id(star, "c"), testing::Id(star, "b"), 1);
  y.Set(testing::Id(star, "a"), testing::Id(star, "c"), 2);
  const nlohmann::json out = RealizationToJson(star, y);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0]["s"], "a");
  EXPECT_EQ(out[0]["t"], "c");
  EXPECT_EQ(out[1]["s"], "b");
  EXPECT_EQ(out[1]["t"], "c");

  nlohmann::json doc{{"realization", out}, {"instance_hash", "abc"}};
  const RealizationDocument parsed = ParseRealization(doc.dump(), star);
  EXPECT_EQ(parsed.realization, y);
  EXPECT_EQ(parsed.instance_hash, "abc");
}

TEST(RealizationDocumentTest, RejectsBadEntries) {
  const Instance star = testing::UniformStar({"a", "b", "c"}, 2);
  EXPECT_THROW(ParseRealization(R"({"realization": [{"s": "a", "t": "s", "y": 1}]})",
                                star),
               InspError);
  EXPECT_THROW(ParseRealization(R"({"realization": [{"s": "a", "t": "b", "y": -1}]})",
                                star),
               InspError);
  EXPECT_THROW(ParseRealization(R"({"realization": [{"s": "a", "t": "b", "y": 1},
                                                    {"s": "b", "t": "a", "y": 1}]})",
                                star),
               InspError);
  EXPECT_THROW(ParseRealization(R"({"other": []})", star), InspError);
}

TEST(GeneratorTest, DeterministicAndWellFormed) {
  const GeneratorOptions options{.terminals = 6, .inner = 3, .rmin = 2,
                                 .rmax = 6, .seed = 42};
  EXPECT_EQ(GenerateInstanceDocument(options).dump(),
            GenerateInstanceDocument(options).dump());
  GeneratorOptions other = options;
  other.seed = 43;
  EXPECT_NE(GenerateInstanceDocument(options).dump(),
            GenerateInstanceDocument(other).dump());

  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance instance = GenerateInstance(
        {.terminals = 3, .inner = 4, .rmin = 2, .rmax = 4, .seed = seed});
    for (NodeId v = 0; v < instance.tree().num_nodes(); ++v) {
      if (instance.tree().degree(v) <= 1 && instance.tree().num_nodes() > 1) {
        EXPECT_TRUE(instance.IsTerminal(v));
      }
    }
    for (NodeId s : instance.terminals()) {
      for (NodeId t : instance.terminals()) {
        if (s == t) continue;
        EXPECT_GE(instance.Requirement(s, t), 2);
        EXPECT_LE(instance.Requirement(s, t), 4);
      }
    }
  }
}

TEST(GeneratorTest, SplitMixReferenceValues) {
  // Published SplitMix64 outputs for seed 1234567.
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng.Next(), 6457827717110365317ULL);
  EXPECT_EQ(rng.Next(), 3203168211198807973ULL);
  EXPECT_EQ(rng.Next(), 9817491932198370423ULL);
}

}  // namespace
}  // namespace insp
