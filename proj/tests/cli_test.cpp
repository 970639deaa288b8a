// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matmed/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "support/test_support.hpp"

namespace matmed {
namespace {

using testing::fixture_path;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("matmed_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(Solve, LineFixtureReportsCostAndRatios) {
  const CliRun r = run({"solve", fixture_path("line_i1.json"), "--mode", "improved"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report["cost"], "2/1");
  EXPECT_EQ(report["lp"], "2/1");
  EXPECT_EQ(report["opt"], "2/1");
  EXPECT_EQ(report["ratio_lp"], "1.000000");
  EXPECT_EQ(report["ratio_opt"], "1.000000");
  EXPECT_EQ(report["valid"], true);
  EXPECT_EQ(report["certified"], true);
  EXPECT_EQ(report["open"], nlohmann::json::array({"a"}));
  EXPECT_FALSE(report["certificate"]["checks"].empty());
}

TEST(Solve, VariantsAndModes) {
  EXPECT_EQ(run({"solve", fixture_path("penalty_single.json")}).code, kExitOk);
  const CliRun knap = run({"solve", fixture_path("knapsack_two.json"), "--epsilon", "1/10"});
  ASSERT_EQ(knap.code, kExitOk) << knap.err;
  EXPECT_EQ(nlohmann::json::parse(knap.out)["cost"], "0/1");
  EXPECT_EQ(run({"solve", fixture_path("line_i1.json"), "--variant", "penalty"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", fixture_path("penalty_single.json"), "--mode", "basic"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", fixture_path("line_i1.json"), "--mode", "fancy"}).code, kExitUsage);
}

TEST(Check, TriangleViolationExitsThree) {
  const CliRun bad = run({"check", fixture_path("triangle_violation.json")});
  EXPECT_EQ(bad.code, kExitInvalid);
  EXPECT_NE((bad.out + bad.err).find("10/1 > 3/1"), std::string::npos);
  EXPECT_EQ(run({"check", fixture_path("line_i1.json")}).code, kExitOk);
}

TEST(Usage, ErrorsMapToExitCodes) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "/nonexistent/instance.json"}).code, kExitUsage);
  EXPECT_EQ(run({"bench", "--seeds", "5..2"}).code, kExitUsage);
}

TEST(Exact, ReportsTheOptimum) {
  const CliRun r = run({"exact", fixture_path("line_i1.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["cost"], "2/1");
  EXPECT_EQ(run({"exact", fixture_path("line_i1.json"), "--cap", "2"}).code, kExitInvalid);
}

TEST(Gen, WritesAValidInstance) {
  TempDir dir;
  const std::string path = dir.file("gen.json");
  ASSERT_EQ(run({"gen", "--seed", "11", "--params", "facilities=5,clients=4,variant=laminar", "-o", path}).code,
            kExitOk);
  EXPECT_EQ(run({"check", path}).code, kExitOk);
  const CliRun again = run({"gen", "--seed", "11", "--params", "facilities=5,clients=4,variant=laminar"});
  EXPECT_EQ(again.out, slurp(path));
  EXPECT_EQ(run({"gen", "--seed", "1", "--params", "facilities=40"}).code, kExitInvalid);
  EXPECT_EQ(run({"gen", "--seed", "1", "--params", "colour"}).code, kExitUsage);
}

TEST(Reduce, WritesInstanceAndMapping) {
  TempDir dir;
  const std::string out = dir.file("reduced.json");
  const CliRun r = run({"reduce", "hardness", fixture_path("hardness_path.json"), out});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(run({"check", out}).code, kExitOk);
  const auto mapping = nlohmann::json::parse(slurp(out + ".mapping.json"));
  EXPECT_EQ(mapping["kind"], "hardness");
  const CliRun exact = run({"exact", out});
  ASSERT_EQ(exact.code, kExitOk) << exact.err;
  EXPECT_EQ(nlohmann::json::parse(exact.out)["zero_cost"], true);
}

TEST(Bench, HundredSeedsWithinTheImprovedBound) {
  const CliRun r = run({"bench", "--seeds", "0..99", "--variant", "plain", "--mode", "improved"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto lines = split(r.out, '\n');
  ASSERT_EQ(lines.size(), 101u);
  EXPECT_EQ(lines[0], "seed,variant,mode,lp,alg,opt,ratio_lp,ratio_opt");
  for (size_t k = 1; k < lines.size(); ++k) {
    const auto cells = split(lines[k], ',');
    ASSERT_EQ(cells.size(), 8u) << lines[k];
    EXPECT_EQ(cells[0], std::to_string(k - 1));
    ASSERT_NE(cells[6], "inf") << lines[k];
    const Rational lp = parse_rational(cells[3]), alg = parse_rational(cells[4]), opt = parse_rational(cells[5]);
    EXPECT_LE(alg, 8 * lp) << lines[k];
    EXPECT_LE(opt, alg);
    EXPECT_LE(std::stod(cells[6]), 8.0);
  }
}

TEST(Bench, OtherVariants) {
  for (const char* variant : {"penalty", "two_matroid", "laminar", "knapsack"}) {
    const CliRun r = run({"bench", "--seeds", "0..4", "--variant", variant, "--params", "facilities=6,clients=4"});
    ASSERT_EQ(r.code, kExitOk) << variant << ": " << r.err;
    EXPECT_EQ(split(r.out, '\n').size(), 6u);
  }
}

TEST(Determinism, ByteIdenticalReports) {
  const std::vector<std::string> bench{"bench", "--seeds", "10..30", "--variant", "plain", "--mode", "basic"};
  EXPECT_EQ(run(bench).out, run(bench).out);
  const std::vector<std::string> solve{"solve", fixture_path("line_i1.json"), "--mode", "lmp"};
  EXPECT_EQ(run(solve).out, run(solve).out);
}

}  // namespace
}  // namespace matmed
