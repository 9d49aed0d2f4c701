#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "lcurve/serialization.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "lcurve");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = lcurve::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lcurve_cli_" + name);
}

}  // namespace

TEST(Cli, Enumerate) {
  const auto r = invoke({"enumerate", "--m", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("24 elements"), std::string::npos);
  EXPECT_NE(invoke({"enumerate", "--n", "2", "--spin"}).out.find("48 elements"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"bogus"}).code, 1);
  EXPECT_EQ(invoke({"enumerate", "--m", "3", "--n", "2"}).code, 1);
  EXPECT_EQ(invoke({"classify"}).code, 1);
  EXPECT_EQ(invoke({"classify", "--m", "9"}).code, 1);
  EXPECT_EQ(invoke({"decompose", "--input", "/nonexistent/matrix.txt"}).code, 1);
}

TEST(Cli, ClassifyWritesReports) {
  const auto json = temp_file("classify.json");
  const auto csv = temp_file("classify.csv");
  const auto r = invoke({"classify", "--n", "3", "--spin", "--json", json.string(), "--csv", csv.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(json);
  const auto j = lcurve::Json::parse(in);
  EXPECT_EQ(j["classes"].size(), 5u);
  EXPECT_EQ(j["level"], "Spin");
  EXPECT_TRUE(std::filesystem::file_size(csv) > 0);
}

TEST(Cli, DecomposeGerm) {
  const auto r = invoke({"decompose", "--input", std::string(LCURVE_TEST_DATA) + "/germ3.txt"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Q0 [3,-2,1]"), std::string::npos);
  const auto file = temp_file("rot.json");
  std::ofstream(file) << "[[0,-1,0],[1,0,0],[0,0,1]]";
  const auto j = invoke({"decompose", "--input", file.string()});
  EXPECT_EQ(j.code, 0);
  EXPECT_NE(j.out.find("Q0 [-2,1,3]"), std::string::npos);
}

TEST(Cli, ChopVerify) {
  const auto r = invoke({"chop-verify", "--m", "3", "--samples", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("24/24 elements pass"), std::string::npos);
}

TEST(Cli, Transit) {
  const auto r = invoke({"transit", "--d1", "[1,-1,-1,1]", "--d2", "[-1,1,1,-1]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(invoke({"transit", "--d1", "[1,1,1,1]", "--d2", "[-1,-1,1,1]"}).code, 1);
  EXPECT_EQ(invoke({"transit", "--m", "3", "--spin"}).code, 0);
}

TEST(Cli, Curve) {
  const auto spec = temp_file("spec.json");
  std::ofstream(spec) << R"({"n": 2, "c": [0.6, 0.8], "a": [12.566370614359172]})";
  const auto out = temp_file("curve.json");
  const auto r = invoke({"curve", "--input", spec.string(), "--json", out.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(out);
  const auto j = lcurve::Json::parse(in);
  EXPECT_EQ(j["endpoint_sign"], 1);
  EXPECT_GT(j["min_wronskian"].get<double>(), 0.0);
  std::ofstream(spec) << "{not json";
  EXPECT_EQ(invoke({"curve", "--input", spec.string()}).code, 1);
}

TEST(Cli, Selftest) {
  const auto r = invoke({"selftest", "--samples", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("9/9 suites passed"), std::string::npos);
}
