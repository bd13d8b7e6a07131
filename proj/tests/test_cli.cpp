#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bosonalg/cli.hpp"

namespace {

using bosonalg::cli::run;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bosonalg_test_" + name);
}

TEST(CliStats, Su11TwoModes) {
  const Outcome o = invoke({"stats", "--n", "2", "--m", "2", "--algebra", "su11"});
  ASSERT_EQ(o.status, 0) << o.err;
  const auto l = lines(o.out);
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[0], "k_1,k_2,probability");
  for (std::size_t i = 1; i < 4; ++i) EXPECT_NE(l[i].find(",0.333333333333"), std::string::npos) << l[i];
  EXPECT_EQ(l[2], "1,1,0.33333333333333331");
}

TEST(CliStats, BruteMatchesClosedToPrintedPrecision) {
  const Outcome closed = invoke({"stats", "--n", "3", "--m", "2"});
  const Outcome brute = invoke({"stats", "--n", "3", "--m", "2", "--method", "brute"});
  ASSERT_EQ(brute.status, 0);
  const auto a = lines(closed.out), b = lines(brute.out);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 1; i < a.size(); ++i) {
    const double pa = std::stod(a[i].substr(a[i].rfind(',') + 1));
    const double pb = std::stod(b[i].substr(b[i].rfind(',') + 1));
    EXPECT_NEAR(pa, pb, 1e-15);
  }
}

TEST(CliStats, JsonHasSchema) {
  const Outcome o = invoke({"stats", "--n", "1", "--m", "2", "--format", "json"});
  ASSERT_EQ(o.status, 0);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["distribution"].size(), 2u);
  EXPECT_EQ(j["distribution"][0]["probability"].get<double>(), 0.5);
}

TEST(CliJc, Su11BarutGirardelloComparison) {
  const auto summary = temp_file("summary.json");
  const Outcome o = invoke({"jc", "--variant", "su11", "--eta", "2,0", "--coupling", "1", "--t-max", "6.2832",
                            "--t-steps", "400", "--compare", "both", "--summary", summary.string()});
  ASSERT_EQ(o.status, 0) << o.err;
  const auto l = lines(o.out);
  EXPECT_EQ(l.front(), "t,sz_exact,sz_closed,abs_err");
  EXPECT_EQ(l.size(), 402u);
  std::ifstream in(summary);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_LT(j["max_abs_err"].get<double>(), 1e-8);
  EXPECT_NEAR(j["revival_period"].get<double>(), 3.141592653589793, 1e-15);
  std::filesystem::remove(summary);
}

TEST(CliJc, SummaryGoesToStderrByDefault) {
  const Outcome o = invoke({"jc", "--alpha", "2,0", "--t-max", "5", "--t-steps", "50"});
  ASSERT_EQ(o.status, 0);
  const auto j = nlohmann::json::parse(o.err);
  EXPECT_TRUE(j["revival_period"].is_null());
  EXPECT_LT(j["max_abs_err"].get<double>(), 1e-8);
}

TEST(CliJc, ExactOnlyLeavesClosedColumnsEmpty) {
  const Outcome o = invoke({"jc", "--alpha", "1,0", "--omega", "2", "--compare", "exact", "--t-steps", "4", "--t-max", "1"});
  ASSERT_EQ(o.status, 0) << o.err;
  const auto l = lines(o.out);
  ASSERT_EQ(l.size(), 6u);
  EXPECT_EQ(l[1].substr(l[1].size() - 2), ",,");
}

TEST(CliErrors, ValidationExitsTwoWithNamedPrecondition) {
  const Outcome off = invoke({"jc", "--alpha", "3,0", "--omega", "2"});
  EXPECT_EQ(off.status, 2);
  EXPECT_NE(off.err.find("resonance"), std::string::npos);
  EXPECT_EQ(lines(off.err).size(), 1u);

  const Outcome tail = invoke({"jc", "--alpha", "30,0", "--cutoff", "50"});
  EXPECT_EQ(tail.status, 2);
  EXPECT_NE(tail.err.find("tail-guard"), std::string::npos);

  const Outcome both = invoke({"jc", "--alpha", "1,0", "--eta", "1,0"});
  EXPECT_EQ(both.status, 2);
  EXPECT_NE(both.err.find("initial-state"), std::string::npos);

  const Outcome bad_complex = invoke({"jc", "--alpha", "1,x"});
  EXPECT_EQ(bad_complex.status, 2);
  EXPECT_NE(bad_complex.err.find("complex-format"), std::string::npos);

  const Outcome kappa = invoke({"lorentz", "--kappa", "0.3"});
  EXPECT_EQ(kappa.status, 2);
  EXPECT_NE(kappa.err.find("invalid-representation"), std::string::npos);

  const Outcome margin = invoke({"lorentz", "--margin", "5"});
  EXPECT_EQ(margin.status, 2);
  EXPECT_NE(margin.err.find("invalid-margin"), std::string::npos);

  const Outcome modes = invoke({"stats", "--n", "9", "--m", "8", "--method", "brute"});
  EXPECT_EQ(modes.status, 2);
  EXPECT_NE(modes.err.find("memory-guard"), std::string::npos);
}

TEST(CliErrors, ParseErrorsExitTwo) {
  EXPECT_EQ(invoke({}).status, 2);
  EXPECT_EQ(invoke({"stats", "--n", "2", "--m", "2", "--bogus", "1"}).status, 2);
  EXPECT_EQ(invoke({"stats", "--n", "2"}).status, 2);
  EXPECT_EQ(invoke({"stats", "--n", "2", "--m", "2", "--algebra", "h1"}).status, 2);
  EXPECT_EQ(invoke({"frobnicate"}).status, 2);
}

TEST(CliErrors, BesselOverflowIsGuardFailure) {
  const Outcome o = invoke({"jc", "--variant", "su11", "--eta", "400,0", "--cutoff", "480001", "--compare", "closed",
                            "--t-steps", "1", "--t-max", "1"});
  EXPECT_EQ(o.status, 1) << o.err;
  EXPECT_NE(o.err.find("overflow-guard"), std::string::npos);
}

TEST(CliConfig, JsonConfigMatchesFlags) {
  const auto path = temp_file("config.json");
  {
    std::ofstream f(path);
    f << R"({"subcommand": "stats", "n": 3, "m": 3, "algebra": "su11"})";
  }
  const Outcome from_config = invoke({"--config", path.string()});
  const Outcome from_flags = invoke({"stats", "--n", "3", "--m", "3", "--algebra", "su11"});
  EXPECT_EQ(from_config.status, 0) << from_config.err;
  EXPECT_EQ(from_config.out, from_flags.out);
  std::filesystem::remove(path);
}

TEST(CliConfig, UnknownKeyRejected) {
  const auto path = temp_file("config_bad.json");
  {
    std::ofstream f(path);
    f << R"({"subcommand": "stats", "n": 3, "m": 3, "colour": "blue"})";
  }
  const Outcome o = invoke({"--config", path.string()});
  EXPECT_EQ(o.status, 2);
  EXPECT_NE(o.err.find("colour"), std::string::npos);
  std::filesystem::remove(path);
  EXPECT_EQ(invoke({"--config", "/nonexistent/bosonalg.json"}).status, 2);
}

TEST(CliOutput, WritesFile) {
  const auto path = temp_file("out.csv");
  const Outcome o = invoke({"--output", path.string(), "stats", "--n", "1", "--m", "2"});
  ASSERT_EQ(o.status, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "k_1,k_2,probability");
  std::filesystem::remove(path);
}

TEST(CliOscillator, TablePasses) {
  const Outcome o = invoke({"oscillator", "--kappa", "0.5", "1.5"});
  ASSERT_EQ(o.status, 0) << o.err;
  const auto l = lines(o.out);
  EXPECT_EQ(l[0], "identity,kappa,cutoff,residual,status");
  EXPECT_EQ(l.size(), 1u + 3u + 2u * 9u);
  for (std::size_t i = 1; i < l.size(); ++i) EXPECT_EQ(l[i].substr(l[i].size() - 4), "PASS") << l[i];
}

TEST(CliLorentz, JsonFields) {
  const Outcome o = invoke({"lorentz", "--margin", "40"});
  ASSERT_EQ(o.status, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_LT(j["residual_su11"].get<double>(), 1e-9);
  EXPECT_GT(j["residual_weyl"].get<double>(), 1e-2);
  EXPECT_GT(j["boost_checks"]["unitarity_witness_gamma_2"].get<double>(), 0.1);
  const Outcome only = invoke({"lorentz", "--algebra", "weyl"});
  EXPECT_TRUE(nlohmann::json::parse(only.out)["residual_su11"].is_null());
}

TEST(CliDeterminism, RepeatedRunsAreByteIdentical) {
  const std::vector<std::string> args{"jc", "--alpha", "1.5,0.5", "--variant", "su11", "--t-steps", "100"};
  const Outcome a = invoke(args), b = invoke(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
}

TEST(CliThreads, RejectsInvalidCap) {
  setenv("BOSONALG_THREADS", "zero", 1);
  EXPECT_EQ(invoke({"stats", "--n", "1", "--m", "1"}).status, 2);
  setenv("BOSONALG_THREADS", "4", 1);
  EXPECT_EQ(invoke({"stats", "--n", "1", "--m", "1"}).status, 0);
  unsetenv("BOSONALG_THREADS");
}

}  // namespace
