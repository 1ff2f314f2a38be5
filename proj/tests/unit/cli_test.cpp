#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "revtype/cli.hpp"
#include "revtype/report.hpp"

namespace revtype::cli {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "revtype");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, ClassifyVerdicts) {
  const Invocation s = invoke({"classify", "--catalog", "sphere"});
  ASSERT_EQ(s.code, 0) << s.err;
  const auto j = nlohmann::json::parse(s.out);
  EXPECT_EQ(j.at("fit").at("verdict"), "SphereType");
  EXPECT_EQ(j.at("config").at("surface").at("params").at("r"), 1.0);
  EXPECT_EQ(nlohmann::json::parse(invoke({"classify", "--catalog", "torus"}).out).at("fit").at("verdict"),
            "NotCoordinateFiniteType");
  EXPECT_EQ(invoke({"classify", "--catalog", "broken-diagonal"}).code, 1);
}

TEST(Cli, ReportsAreDeterministic) {
  const std::vector<std::string> args = {"verify", "formula-equivalence", "--catalog", "torus", "--ns", "8", "--ntheta", "8"};
  const Invocation a = invoke(args);
  const Invocation b = invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, invoke({"verify", "formula-equivalence", "--catalog", "torus", "--ns", "8", "--ntheta", "8", "--seed", "2"}).out);
}

TEST(Cli, CsvOutput) {
  const Invocation r = invoke({"verify", "laplacian-identity", "--catalog", "sphere", "--ns", "4", "--ntheta", "4", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "s,theta,value,reference,residual");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 17);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "revtype_cli_test.json";
  const Invocation r = invoke({"case2", "--step", "1", "-o", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(r.out.empty());  // summary
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j.at("command"), "case2");
  EXPECT_TRUE(j.at("certificate").at("bounded_away_from_zero").get<bool>());
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({"frobnicate"}).code, 1);
  EXPECT_EQ(invoke({"classify"}).code, 1);
  EXPECT_EQ(invoke({"classify", "--catalog", "sphere", "--profile", "x.json"}).code, 1);
  EXPECT_EQ(invoke({"classify", "--catalog", "sphere", "--param", "r"}).code, 1);
  EXPECT_EQ(invoke({"classify", "--catalog", "sphere", "--param", "r=-1"}).code, 1);
  EXPECT_EQ(invoke({"verify", "reduced-system", "--catalog", "torus", "--lambda", "2", "--mu", "2"}).code, 2);
  EXPECT_EQ(invoke({"case2", "--lambda", "1", "--mu", "1"}).code, 2);
  EXPECT_EQ(invoke({"eval", "sqrt(1+s^2)", "--s", "0"}).code, 0);
  EXPECT_EQ(invoke({"eval", "ln(s)", "--s", "-1"}).code, 1);
}

TEST(Cli, EvalReportsJet) {
  const auto j = nlohmann::json::parse(invoke({"eval", "s^3", "--s", "2"}).out);
  EXPECT_EQ(j.at("jet"), (nlohmann::json{8.0, 12.0, 12.0, 6.0}));
}

TEST(Report, FormatNumber) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1e300), "1e+300");
}

}  // namespace
}  // namespace revtype::cli
