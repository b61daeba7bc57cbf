#include <gtest/gtest.h>

#include "blf/report.hpp"
#include "json.hpp"

namespace {

blf::Report sample() {
  blf::Report r;
  r.model = "fold";
  r.command = "betti";
  r.seed = 42;
  r.checks.push_back({"fold H1 dimensions", true, "computed 1,1"});
  blf::BettiCell a;
  a.k = 1;
  a.degree = 0;
  a.computed = 1;
  a.predicted = 1;
  blf::BettiCell b;
  b.k = 1;
  b.degree = 1;
  b.computed = 4;
  b.predicted = 1;
  blf::BettiCell c;
  c.k = 2;
  c.degree = 0;
  c.computed = 0;
  r.betti = {a, b, c};
  return r;
}

}  // namespace

TEST(Report, JsonSchema) {
  const auto j = nlohmann::json::parse(blf::to_json(sample()));
  EXPECT_EQ(j.at("model"), "fold");
  EXPECT_EQ(j.at("command"), "betti");
  EXPECT_EQ(j.at("seed"), 42);
  ASSERT_EQ(j.at("checks").size(), 1U);
  EXPECT_EQ(j["checks"][0].at("name"), "fold H1 dimensions");
  EXPECT_EQ(j["checks"][0].at("pass"), true);
  EXPECT_EQ(j["checks"][0].at("details"), "computed 1,1");
  ASSERT_EQ(j.at("betti").size(), 3U);
  EXPECT_EQ(j["betti"][1].at("computed"), 4);
  EXPECT_EQ(j["betti"][1].at("predicted"), 1);
  EXPECT_TRUE(j["betti"][2].at("predicted").is_null());
  EXPECT_FALSE(j.contains("elapsed_seconds"));
}

TEST(Report, CsvBettiRows) {
  EXPECT_EQ(blf::to_csv(sample()),
            "k,degree,computed,predicted,match\n"
            "1,0,1,1,true\n"
            "1,1,4,1,false\n"
            "2,0,0,,\n");
}

TEST(Report, CsvChecksWhenNoBetti) {
  blf::Report r;
  r.checks.push_back({"a, b", false, "say \"x\""});
  EXPECT_EQ(blf::to_csv(r), "name,pass,details\n\"a, b\",false,\"say \"\"x\"\"\"\n");
}

TEST(Report, PassReflectsChecksAndCells) {
  blf::Report r = sample();
  EXPECT_FALSE(r.pass());
  r.betti.erase(r.betti.begin() + 1);
  EXPECT_TRUE(r.pass());
  r.checks[0].pass = false;
  EXPECT_FALSE(r.pass());
}

TEST(Report, DeterministicForSameSeed) {
  blf::Report a;
  a.add(blf::identity_suites(5, 17));
  blf::Report b;
  b.add(blf::identity_suites(5, 17));
  EXPECT_EQ(blf::to_json(a), blf::to_json(b));
}
