#include "schur/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>

using namespace schur;
using nlohmann::json;

namespace {

CliOutput call(std::vector<std::string> args) { return run_cli(args); }

json parse(const CliOutput& o) { return json::parse(o.out); }

bool all_checks_pass(const json& j) {
  for (const auto& c : j["checks"])
    if (!c["pass"].get<bool>()) return false;
  return true;
}

}  // namespace

TEST(Cli, MultiplierMetacyclic) {
  auto o = call({"multiplier", "mc:8,0,3"});
  ASSERT_EQ(o.exit_code, kExitOk) << o.err;
  auto j = parse(o);
  EXPECT_EQ(j["result"]["invariant_factors"], json::array({2}));
  EXPECT_EQ(j["subcommand"], "multiplier");
  EXPECT_EQ(j["seed"], 20240417);
}

TEST(Cli, MultiplierFiniteAgreesWithBarComplex) {
  auto j = parse(call({"multiplier", "fab:[2,4]"}));
  EXPECT_EQ(j["result"]["invariant_factors"], json::array({2}));
  ASSERT_EQ(j["checks"].size(), 1u);
  EXPECT_TRUE(j["checks"][0]["pass"].get<bool>());
  auto d = parse(call({"multiplier", "dic:2"}));
  EXPECT_EQ(d["result"]["invariant_factors"], json::array());
  EXPECT_EQ(d["result"]["method"], "bar_complex");
}

TEST(Cli, SpecErrorsCarryOffsetAndRule) {
  auto o = call({"multiplier", "mc:8,0,2"});
  EXPECT_EQ(o.exit_code, kExitInvalidInput);
  auto j = parse(o);
  EXPECT_EQ(j["error"]["kind"], "invalid_input");
  EXPECT_EQ(j["error"]["rule"], "gcd(r,m)=1");
  auto syn = parse(call({"h2", "mc:8,,3"}));
  EXPECT_EQ(syn["error"]["rule"], "syntax");
  EXPECT_TRUE(syn["error"].contains("offset"));
}

TEST(Cli, NonAssociativeTableIsInvalidInput) {
  const std::string path = ::testing::TempDir() + "schur_bad_table.json";
  {
    std::ofstream f(path);
    // Latin square on 3 elements that is not associative.
    f << R"({"order":3,"identity":0,"mult":[[0,1,2],[1,2,0],[2,1,0]]})";
  }
  auto o = call({"h2", "table:@" + path});
  EXPECT_EQ(o.exit_code, kExitInvalidInput) << o.out;
  std::remove(path.c_str());
  EXPECT_EQ(call({"h2", "table:@/nonexistent/file.json"}).exit_code, kExitInvalidInput);
}

TEST(Cli, CapsMapToExitThree) {
  EXPECT_EQ(call({"h2", "fab:[2,2,2,2,2]"}).exit_code, kExitCapExceeded);
  EXPECT_EQ(call({"irr", "fab:[100]"}).exit_code, kExitCapExceeded);
  EXPECT_EQ(call({"--max-order", "8", "h2", "fab:[3,3]"}).exit_code, kExitCapExceeded);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).exit_code, kExitInvalidInput);
  EXPECT_EQ(call({"frobnicate"}).exit_code, kExitInvalidInput);
  EXPECT_EQ(call({"--format", "xml", "multiplier", "fab:[2]"}).exit_code, kExitInvalidInput);
  EXPECT_EQ(call({"alpha-finite"}).exit_code, kExitInvalidInput);
  EXPECT_EQ(call({"alpha-finite", "--metacyclic", "4,4,3"}).exit_code, kExitInvalidInput);
  EXPECT_EQ(call({"induce", "fab:[2,2]", "--subgroup", "9"}).exit_code, kExitInvalidInput);
  EXPECT_EQ(call({"--help"}).exit_code, kExitOk);
}

TEST(Cli, RepgroupVerify) {
  auto o = call({"repgroup", "mc:4,2,3", "--verify"});
  ASSERT_EQ(o.exit_code, kExitOk) << o.out;
  auto j = parse(o);
  EXPECT_EQ(j["result"]["order"], 16);
  EXPECT_EQ(j["checks"].size(), 7u);
  EXPECT_TRUE(all_checks_pass(j));
  auto p = parse(call({"repgroup", "mc:8,0,3", "--verify"}));
  EXPECT_EQ(p["result"]["kind"], "presentation");
  EXPECT_EQ(p["result"]["cover"], "mc:16,0,3");
  EXPECT_TRUE(all_checks_pass(p));
}

TEST(Cli, CocycleFamilies) {
  auto f = parse(call({"cocycle", "fab:[2,2]", "--class", "1"}));
  EXPECT_EQ(f["result"]["class_order"], 2);
  EXPECT_TRUE(all_checks_pass(f));
  auto m = call({"cocycle", "mc:8,0,3", "--lambda", "1", "--samples", "2000"});
  EXPECT_EQ(m.exit_code, kExitOk);
  EXPECT_EQ(parse(m)["result"]["inflation_witness"]["delta_exp"], 4);
  auto h = call({"cocycle", "heis:[1];4", "--lambda", "1", "--mu", "3", "--samples", "2000"});
  EXPECT_EQ(h.exit_code, kExitOk);
  EXPECT_EQ(call({"cocycle", "mc:8,0,3", "--lambda", "5"}).exit_code, kExitInvalidInput);
}

TEST(Cli, IrrInduceLift) {
  auto irr = parse(call({"irr", "fab:[2,2]", "--class", "1"}));
  EXPECT_EQ(irr["result"]["dims"], json::array({2}));
  EXPECT_TRUE(all_checks_pass(irr));
  auto ind = parse(call({"induce", "fab:[2,2]", "--subgroup", "1", "--class", "1"}));
  EXPECT_EQ(ind["result"]["dim"], 2);
  EXPECT_EQ(ind["result"]["commutant_dimension"], 1);
  EXPECT_EQ(ind["result"]["matrices"].size(), 4u);
  EXPECT_TRUE(all_checks_pass(ind));
  auto lift = call({"lift", "dic:2", "--subgroup", "1"});
  ASSERT_EQ(lift.exit_code, kExitOk) << lift.out;
  auto lj = parse(lift);
  EXPECT_EQ(lj["result"]["total_order"], 8);
  EXPECT_TRUE(all_checks_pass(lj));
  auto reg = parse(call({"lift", "mc:4,2,3", "--class", "1"}));
  EXPECT_EQ(reg["result"]["dim"], 8);
  EXPECT_EQ(reg["result"]["total_order"], 16);
  EXPECT_TRUE(all_checks_pass(reg));
}

TEST(Cli, AlphaFinite) {
  auto a = parse(call({"alpha-finite", "--metacyclic", "5,0,2"}));
  EXPECT_EQ(a["result"]["paper_equivalence_flag"], false);
  EXPECT_EQ(a["result"]["index"], 4);
  auto b = parse(call({"alpha-finite", "--metacyclic", "0,5,2"}));
  EXPECT_EQ(b["result"]["verdict"], "not alpha-finite");
  EXPECT_FALSE(b["checks"].empty());
  auto h = parse(call({"alpha-finite", "--heisenberg", "4", "--lambda", "1", "--mu", "1", "--samples", "1000"}));
  EXPECT_EQ(h["result"]["index"], 4);
  EXPECT_EQ(h["result"]["class_order"], 4);
  auto s = call({"alpha-finite", "--shift-demo", "--samples", "500"});
  EXPECT_EQ(s.exit_code, kExitOk);
  EXPECT_EQ(parse(s)["checks"].size(), 3u);
}

TEST(Cli, ShiftDemo) {
  auto o = call({"shift-demo", "--samples", "1000"});
  ASSERT_EQ(o.exit_code, kExitOk);
  auto j = parse(o);
  EXPECT_EQ(j["result"]["indices"].size(), 15u);
  EXPECT_TRUE(all_checks_pass(j));
  auto w1 = parse(call({"shift-demo", "--window", "1", "--samples", "10"}));
  EXPECT_TRUE(w1["checks"][1]["vacuous"].get<bool>());
  EXPECT_EQ(call({"shift-demo", "--window", "0"}).exit_code, kExitInvalidInput);
}

TEST(Cli, Determinism) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--seed", "7", "irr", "mc:4,2,3"},
           {"--seed", "7", "cocycle", "mc:12,0,5", "--lambda", "1", "--samples", "500"},
           {"shift-demo", "--samples", "300"},
           {"lift", "fab:[2,2]", "--class", "1"}}) {
    auto a = call(args), b = call(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.exit_code, b.exit_code);
  }
  auto t = parse(call({"--timing", "multiplier", "fab:[2]"}));
  EXPECT_TRUE(t.contains("wall_time_s"));
  EXPECT_FALSE(parse(call({"multiplier", "fab:[2]"})).contains("wall_time_s"));
  EXPECT_EQ(parse(call({"--seed", "99", "multiplier", "fab:[2]"}))["seed"], 99);
}

TEST(Cli, TableFormat) {
  auto o = call({"--format", "table", "h2", "mc:4,2,3"});
  EXPECT_EQ(o.exit_code, kExitOk);
  EXPECT_NE(o.out.find("result.h2_integral: [2]"), std::string::npos);
  EXPECT_NE(o.out.find("PASS bruteforce_agrees"), std::string::npos);
  auto e = call({"--format", "table", "multiplier", "mc:8,0,2"});
  EXPECT_NE(e.out.find("error.kind: invalid_input"), std::string::npos);
}

TEST(Cli, Selftest) {
  auto o = call({"selftest", "--corpus-order", "8"});
  ASSERT_EQ(o.exit_code, kExitOk) << o.out;
  auto j = parse(o);
  EXPECT_FALSE(j["checks"].empty());
  EXPECT_TRUE(all_checks_pass(j));
}
