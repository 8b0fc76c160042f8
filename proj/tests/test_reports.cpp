#include <gtest/gtest.h>

#include "randotop/json_io.hpp"
#include "randotop/verify.hpp"

using namespace randotop;

TEST(Json, IntervalSetPairs) {
  IntervalSet a = parse_interval_set("[0,1/4)∪[1/2,2/3)");
  Json j = to_json(a);
  EXPECT_EQ(j.dump(), R"([["0","1/4"],["1/2","2/3"]])");
  EXPECT_EQ(interval_set_from_json(j), a);
  EXPECT_EQ(to_json(IntervalSet{}).dump(), "[]");
  EXPECT_THROW(interval_set_from_json(Json::parse(R"([["0"]])")), domain_error);
}

TEST(Json, SimplexCylinderComplex) {
  RandomSimplex f = parse_random_simplex("{0: [0,1/2), 1: ∅, 2: [1/2,1)}");
  EXPECT_EQ(random_simplex_from_json(to_json(f)), f);
  CylinderPoint c = parse_cylinder_point("{0-: [0,1/4), 1-: [1/4,1/2), 1+: [1/2,1)}", 1);
  EXPECT_EQ(to_json(c).dump(), R"({"0-":[["0","1/4"]],"1-":[["1/4","1/2"]],"1+":[["1/2","1"]]})");
  SimplicialComplex k = complex_from_json(Json::parse("[[0,1,2],[2,3]]"));
  EXPECT_EQ(k.vertex_count(), 4u);
  EXPECT_TRUE(k.contains({1, 2}));
  EXPECT_FALSE(k.contains({1, 3}));
  EXPECT_EQ(to_json(k).dump(), "[[0,1,2],[2,3]]");
}

TEST(Reports, ReproducibleAndSchemaTagged) {
  VerifyOptions opt;
  opt.trials = 50;
  opt.seed = 9;
  auto a = cmd_verify({"g-properties", "horn"}, opt);
  auto b = cmd_verify({"g-properties", "horn"}, opt);
  std::string ja = reports_to_json(a, opt).dump();
  EXPECT_EQ(ja, reports_to_json(b, opt).dump());
  Json parsed = Json::parse(ja);
  EXPECT_EQ(parsed["schema"], "randotop/1");
  EXPECT_EQ(parsed["reports"].size(), 2u);
  EXPECT_TRUE(parsed["passed"].get<bool>());
  EXPECT_FALSE(parsed["reports"][0].contains("runtime_ms"));
  EXPECT_TRUE(reports_to_json(a, opt, true)["reports"][0].contains("runtime_ms"));
}

TEST(Reports, SuiteNames) {
  EXPECT_EQ(resolve_suites({"all"}).size(), 10u);
  EXPECT_EQ(resolve_suites({"horn", "all"}).front(), "horn");
  EXPECT_THROW(resolve_suites({"nope"}), arity_error);
}

TEST(Reports, FailuresAreRecorded) {
  SuiteRun run("demo", VerifyOptions{});
  run.trials("t", 3, [&](Sampler& s) {
    Rational x = s.unit_rational();
    run.equal("x = 2", x, Rational(2), [&] { return "x=" + to_string(x); });
    run.at_most("x ≤ -1", x, Rational(-1), [] { return std::string(); });
  });
  run.trials("throws", 1, [](Sampler&) { throw domain_error("boom"); });
  VerificationReport r = run.finish();
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failure_count, 7u);
  EXPECT_EQ(r.failures.back().got, "boom");
  ASSERT_TRUE(r.max_slack.has_value());
  EXPECT_GE(*r.max_slack, Rational(1));
}

TEST(Reports, DegeneracyWitnessNamed) {
  VerificationReport r = run_suite("degeneracy-counterexample", VerifyOptions{});
  EXPECT_TRUE(r.passed());
  bool has_f = false;
  for (const auto& [k, v] : r.notes) has_f = has_f || (k == "f" && v == "{0: [2/3,1), 1: [1/3,2/3), 2: [0,1/3)}");
  EXPECT_TRUE(has_f);
}
