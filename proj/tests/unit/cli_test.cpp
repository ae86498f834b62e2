#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Invocation run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = mpa::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

TEST(Cli, MinLength) {
  Invocation r = run({"lmin", "--q", "2", "--hbar", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.json()["l_min"].get<double>(), 2.492900960560922, 1e-14);
  r = run({"lmin", "--D", "1", "--mu", "1", "--Hbar", "1", "--Q", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.json()["L_min"].get<double>(), r.json()["l_min"].get<double>(), 1e-15);
  EXPECT_EQ(run({"lmin", "--q", "0.5", "--hbar", "1"}).code, 2);
}

TEST(Cli, Solve) {
  Invocation r = run({"solve", "--l", "2", "--q", "0.5", "--hbar", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(r.json()["reserve"]["present"].get<bool>());
  r = run({"solve", "--l", "4", "--q", "2", "--hbar", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_TRUE(j["reserve"]["present"].get<bool>());
  const auto b = j["policy"]["breakpoints"];
  EXPECT_EQ(b[1].get<double>() + b[2].get<double>(), 0.0);
  r = run({"solve", "--l", "2", "--q", "2", "--hbar", "1"});
  EXPECT_FALSE(r.json()["reserve"]["present"].get<bool>());
}

TEST(Cli, SolveUnscaledReportsBoundary) {
  const Invocation r = run({"solve", "--D", "1", "--R", "1", "--mu", "1", "--Hbar", "1",
                     "--Q", "2", "--L", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_NEAR(j["reserve"]["boundary_B"].get<double>(),
              j["reserve"]["halfwidth"].get<double>(), 1e-12);
}

TEST(Cli, SolveWritesProfile) {
  const std::string path = ::testing::TempDir() + "mpa_profile.csv";
  const Invocation r = run({"solve", "--l", "4", "--q", "2", "--hbar", "1", "--profile",
                     path, "--samples", "64"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  const auto rows = csv_rows(ss.str());
  ASSERT_EQ(rows.size(), 65u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"x", "u", "v"}));
  EXPECT_EQ(ss.str().find('\r'), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, VerifyPassesForBothRegimes) {
  Invocation r = run({"verify", "--l", "4", "--q", "2", "--hbar", "1", "--cells", "12"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_TRUE(r.json()["all_pass"].get<bool>());
  r = run({"verify", "--l", "2", "--q", "0.5", "--hbar", "1"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.json()["checks"]["brute_force"]["best_descriptor"].get<std::string>(),
            std::string(12, 'H'));
}

TEST(Cli, VerifyCellCap) {
  EXPECT_EQ(run({"verify", "--l", "4", "--q", "2", "--hbar", "1", "--cells", "20"}).code, 2);
}

TEST(Cli, SweepLengthFindsThreshold) {
  const Invocation r = run({"sweep", "--param", "l", "--from", "2", "--to", "6", "--steps",
                     "81", "--q", "2", "--hbar", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 82u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"param", "reserve_present", "halfwidth",
                                               "Ts", "l_min", "objective_j"}));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][1] == "true") {
      EXPECT_NEAR(std::stod(rows[i][0]), 2.492900960560922, 0.05);
      EXPECT_GT(std::stod(rows[i][0]), 2.492900960560922);
      break;
    }
  }
}

TEST(Cli, SweepWeightDecreasesMinLength) {
  const Invocation r = run({"sweep", "--param", "q", "--from", "1.1", "--to", "5", "--steps",
                     "40", "--l", "4", "--hbar", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  for (std::size_t i = 2; i < rows.size(); ++i) {
    EXPECT_LT(std::stod(rows[i][4]), std::stod(rows[i - 1][4]));
  }
}

TEST(Cli, SweepHarvestRowsWellFormed) {
  const std::string path = ::testing::TempDir() + "mpa_sweep.csv";
  const Invocation r = run({"sweep", "--param", "hbar", "--from", "0.5", "--to", "4",
                     "--steps", "8", "--l", "4", "--q", "0.5", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  const auto rows = csv_rows(ss.str());
  ASSERT_EQ(rows.size(), 9u);
  for (const auto& row : rows) EXPECT_EQ(row.size(), 6u);
  EXPECT_EQ(rows[1][1], "false");
  EXPECT_EQ(rows[1][3], "");
  std::remove(path.c_str());
}

TEST(Cli, SweepRejectsMalformedRange) {
  EXPECT_EQ(run({"sweep", "--param", "l", "--from", "6", "--to", "2", "--steps", "5",
                 "--q", "2", "--hbar", "1"}).code, 2);
  EXPECT_EQ(run({"sweep", "--param", "l", "--from", "2", "--to", "6", "--steps", "1",
                 "--q", "2", "--hbar", "1"}).code, 2);
  EXPECT_EQ(run({"sweep", "--param", "zeta", "--from", "2", "--to", "6", "--steps",
                 "3", "--q", "2", "--hbar", "1"}).code, 2);
}

TEST(Cli, ScaleAndSimulate) {
  Invocation r = run({"scale", "--D", "4", "--R", "3", "--mu", "1", "--Hbar", "1", "--Q",
               "0.5", "--L", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["l"].get<double>(), 2.0);
  EXPECT_EQ(r.json()["length_scale"].get<double>(), 2.0);
  r = run({"simulate", "--l", "2", "--q", "0.5", "--hbar", "1", "--dx", "0.01",
           "--t-max", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LT(r.json()["l2_distance"].get<double>(), 1e-4);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"solve", "--l", "2", "--q", "2"}).code, 2);
  EXPECT_EQ(run({"solve", "--l", "2", "--q", "2", "--hbar", "1", "--D", "1"}).code, 2);
  EXPECT_EQ(run({"solve", "--l", "-2", "--q", "2", "--hbar", "1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"solve", "--l", "4", "--q", "2", "--hbar", "1"};
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
