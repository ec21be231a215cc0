#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>
#include <vector>

#include "cli.hpp"

using namespace supercong;
using nlohmann::json;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, CheckFirstSumBothModes) {
  const auto r = invoke({"check", "s1", "--p-max", "50", "--s-max", "1", "--mode", "both"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["command"], "check");
  EXPECT_EQ(doc["tool_version"], cli::kToolVersion);
  EXPECT_TRUE(doc["verdict"].get<bool>());
  // 14 odd primes below 50, two families
  EXPECT_EQ(doc["summary"]["cases"], 28);
  EXPECT_EQ(doc["outcomes"].size(), 28u);
  EXPECT_EQ(doc["outcomes"][0]["family"], "F1-full");
  EXPECT_EQ(doc["outcomes"][0]["modulus"], "3^3");
}

TEST(Cli, ExpectedExceptionStillExitsZero) {
  const auto r = invoke({"check", "s6", "--p-max", "3", "--s-max", "1"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto doc = json::parse(r.out);
  ASSERT_EQ(doc["outcomes"].size(), 1u);
  const auto& rec = doc["outcomes"][0];
  EXPECT_FALSE(rec["holds"].get<bool>());
  EXPECT_TRUE(rec["expected_exception"].get<bool>());
  EXPECT_EQ(rec["lhs"], "24");
  EXPECT_EQ(rec["rhs"], "15");
  EXPECT_EQ(doc["summary"]["expected_exceptions"], 1);
  EXPECT_TRUE(doc["summary"]["unexpected"].empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"check", "bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"check", "--mode", "quarter"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"series", "e1", "--digits", "5"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"series", "e1", "--digits", "20000"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"series", "e9"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"dump", "f8", "--mod", "9^2"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"dump", "f8", "--mod", "seven"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"dump", "tribonacci"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitUsage);
}

TEST(Cli, SeriesReports) {
  const auto e1 = invoke({"series", "e1", "--digits", "50", "--format", "json"});
  ASSERT_EQ(e1.code, cli::kExitOk) << e1.err;
  const auto doc = json::parse(e1.out);
  EXPECT_TRUE(doc["verdict"].get<bool>());
  EXPECT_EQ(doc["results"][0]["closed_form"], "32/(pi)");
  EXPECT_GE(doc["results"][0]["digits_matched"].get<long>(), 50);

  const auto ecz = invoke({"series", "ecz", "--digits", "30"});
  EXPECT_EQ(ecz.code, cli::kExitOk) << ecz.err;
  EXPECT_NE(ecz.out.find("PASS"), std::string::npos);
}

TEST(Cli, DumpSequences) {
  EXPECT_EQ(lines(invoke({"dump", "f8", "--count", "3"}).out),
            (std::vector<std::string>{"0", "21", "987"}));
  EXPECT_EQ(lines(invoke({"dump", "apery", "--count", "4"}).out),
            (std::vector<std::string>{"1", "5", "73", "1445"}));
  EXPECT_EQ(lines(invoke({"dump", "v", "--count", "3", "--mod", "7^2"}).out),
            (std::vector<std::string>{"1", "0", "48"}));
  const auto r = invoke({"dump", "lucas", "--count", "5", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["terms"], json({"2", "1", "3", "4", "7"}));
  EXPECT_TRUE(doc["parameters"]["modulus"].is_null());
}

TEST(Cli, SelftestPassesAndIsRepeatable) {
  const auto a = invoke({"selftest"});
  const auto b = invoke({"selftest"});
  EXPECT_EQ(a.code, cli::kExitOk) << a.out;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SelftestCatchesCorruptedWeights) {
  std::vector<SumSpec> specs(builtin_sum_specs().begin(), builtin_sum_specs().end());
  specs[1].coeffs[1].f += 2;
  SelftestOptions options;
  options.sums = specs;
  options.grid_length = 20;
  options.series_digits = 0;
  std::ostringstream out;
  EXPECT_EQ(cli::run_selftest_command(options, "json", out), cli::kExitFailure);
  const auto doc = json::parse(out.str());
  EXPECT_FALSE(doc["verdict"].get<bool>());
  bool base_failed = false;
  for (const auto& c : doc["checks"]) {
    if (c["name"] == "base_consistency" || c["name"] == "congruences_small_primes") {
      base_failed = base_failed || !c["pass"].get<bool>();
    }
  }
  EXPECT_TRUE(base_failed);
}

TEST(Cli, CsvColumns) {
  const auto r = invoke({"check", "s2", "--p-max", "7", "--format", "csv", "--mode", "half"});
  ASSERT_EQ(r.code, cli::kExitOk);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0],
            "family,p,s,truncation,modulus,lhs,rhs,valuation_excess,holds,expected_exception,"
            "symbol_zero");
  EXPECT_EQ(rows[1].rfind("F2-half,3,1,2,3^3,21,21,3,true,false,", 0), 0u) << rows[1];
}

TEST(Cli, DeterministicAcrossRunsAndJobs) {
  auto payload = [](const std::string& jobs) {
    auto doc = json::parse(invoke({"check", "all", "--p-max", "30", "--jobs", jobs}).out);
    doc.erase("timestamp");
    doc["parameters"].erase("jobs");
    return doc.dump();
  };
  const std::string one = payload("1");
  EXPECT_EQ(one, payload("8"));
  EXPECT_EQ(one, payload("8"));
}
