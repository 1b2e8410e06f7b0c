#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "grm_tools/cli.hpp"

namespace grm::tools {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(std::vector<std::string> args) {
  const auto o = call(std::move(args));
  EXPECT_EQ(o.code, 0) << o.err;
  return nlohmann::json::parse(o.out);
}

TEST(Cli, DistanceOfWitness) {
  const auto j = json_of({"distance", "--q", "3", "--m", "3", "--poly", "y^2+x*y+y^2*z+x*y*z+y^2*z^2+x^2*z^2"});
  EXPECT_EQ(j["distance"], 16);
}

TEST(Cli, BoundsAtFive) {
  const auto j = json_of({"bounds", "--q", "3", "--m", "5"});
  EXPECT_EQ(j["lower"], 156);
  EXPECT_EQ(j["upper"], 156);
  EXPECT_EQ(j["exact"], 156);
  EXPECT_EQ(j["general_bound"]["floor"], 156);
}

TEST(Cli, QuadricZeros) {
  const auto j = json_of({"quadric-zeros", "--q", "3", "--n", "2", "--poly", "x1*x2"});
  EXPECT_EQ(j["formula"], 5);
  EXPECT_EQ(j["oracle"], 5);
}

TEST(Cli, FieldSelection) {
  EXPECT_EQ(json_of({"field-check", "--q", "9"})["modulus"], nlohmann::json({1, 0, 1}));
  EXPECT_EQ(json_of({"field-check", "--p", "3", "--t", "2"})["q"], 9);
  EXPECT_EQ(call({"field-check", "--q", "9", "--p", "5"}).code, kExitUsage);
}

TEST(Cli, EvalInterpolateRoundTrip) {
  auto j = json_of({"eval", "--q", "3", "--m", "1", "--poly", "1+2*x^2"});
  EXPECT_EQ(j["values"], nlohmann::json({1, 0, 0}));
  j = json_of({"interpolate", "--q", "3", "--m", "1", "--values", "1,0,0"});
  EXPECT_EQ(j["poly"], "1+2*x^2");
  j = json_of({"eval", "--q", "3", "--m", "2", "--poly", "x1*x2", "--point", "2,2"});
  EXPECT_EQ(j["value"], 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, kExitUsage);
  EXPECT_EQ(call({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(call({"distance", "--q", "3", "--m", "3", "--bogus", "1"}).code, kExitUsage);
  EXPECT_EQ(call({"distance", "--q", "6", "--m", "1", "--poly", "x"}).code, kExitUsage);
  EXPECT_EQ(call({"distance", "--q", "3", "--m", "2", "--poly", "x+"}).code, kExitUsage);
  EXPECT_EQ(call({"rho2", "--q", "3"}).code, kExitUsage);
}

TEST(Cli, SizeGuards) {
  EXPECT_EQ(call({"radius", "--q", "3", "--m", "3"}).code, kExitSizeGuard);
  EXPECT_EQ(call({"search", "--space", "deg4"}).code, kExitSizeGuard);
}

TEST(Cli, Formats) {
  const auto csv = call({"rho2", "--q", "3", "--m", "3", "--format", "csv"});
  EXPECT_EQ(csv.out, "m,q,rho2\n3,3,15\n");
  const auto text = call({"rho2", "--q", "3", "--m", "3", "--format", "text"});
  EXPECT_EQ(text.out, "m: 3\nq: 3\nrho2: 15\n");
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"search", "--q", "3", "--m", "2", "--threshold", "5", "--threads", "2"};
  const auto a = call(args);
  const auto b = call(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["survivors"].size(), 6u);
  EXPECT_TRUE(j["elapsed_ms"].is_null());
}

TEST(Cli, SearchSlice) {
  const auto j = json_of({"search", "--space", "deg5-slice", "--max-cosets", "1000"});
  EXPECT_EQ(j["threshold"], 16);
  EXPECT_FALSE(j["complete"]);
}

TEST(Cli, EquivAndLift) {
  auto j = json_of({"equiv", "--q", "3", "--m", "2", "--poly", "x^2+y^2", "--poly2", "2*x*y+x^2+1"});
  EXPECT_EQ(j["equivalent"], false);
  j = json_of({"equiv", "--q", "3", "--m", "2", "--poly", "x*y", "--poly2", "x^2+2*y^2+x"});
  EXPECT_EQ(j["equivalent"], true);
  j = json_of({"lift-witness", "--q", "3", "--m", "3", "--poly", "y^2+x*y+y^2*z+x*y*z+y^2*z^2+x^2*z^2"});
  EXPECT_EQ(j["distance_u"], 156);
  EXPECT_EQ(j["bound_holds"], true);
}

TEST(Cli, RadiusAndStrength) {
  auto j = json_of({"radius", "--q", "3", "--m", "2"});
  EXPECT_EQ(j["radius"], 5);
  j = json_of({"radius", "--q", "3", "--m", "3", "--r", "2"});
  EXPECT_EQ(j["radius"], 15);
  EXPECT_EQ(j["rho2"], 15);
  j = json_of({"strength", "--q", "3", "--m", "2"});
  EXPECT_EQ(j["multiplicity"], 3);
  EXPECT_EQ(j["self_complementary"], true);
}

}  // namespace
}  // namespace grm::tools
