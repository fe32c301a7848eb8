#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "affchar/json_io.hpp"

using affchar::Json;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(AFFCHAR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("affchar_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, PermweightsTrivialA4) {
  const auto r = run("permweights --rank 4 --level 0 --labels 0,0,0,0 --max-depth 8");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["count"], 32);
  EXPECT_EQ(j["members"].size(), 32u);
  EXPECT_EQ(j["notation"].get<std::string>().rfind("(0,0,0,0)_0 (1,0,0,1)_1", 0), 0u);
  EXPECT_EQ(j["members"][1].dump(), R"({"depth":1,"labels":[1,0,0,1],"sign":-1})");
}

TEST(Cli, PermweightsBasicA4BothMethods) {
  const auto lemma = run("permweights --rank 4 --level 1 --labels 0,0,0,0 --max-depth 8 --method lemma");
  const auto trans = run("permweights --rank 4 --level 1 --labels 0,0,0,0 --max-depth 8 --method translation");
  ASSERT_EQ(lemma.code, 0);
  EXPECT_EQ(Json::parse(lemma.out)["count"], 23);
  EXPECT_EQ(lemma.out, trans.out);
}

TEST(Cli, PermweightsDepthZero) {
  const auto r = run("permweights --rank 3 --level 2 --labels 1,0,1 --max-depth 0");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["notation"], "(1,0,1)_0");
}

TEST(Cli, PermweightsCsv) {
  const auto r = run("permweights --rank 4 --level 0 --max-depth 1 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "labels,depth,sign\n0 0 0 0,0,1\n1 0 0 1,1,-1\n");
}

TEST(Cli, InvalidWeight) {
  EXPECT_EQ(run("permweights --rank 4 --level 1 --labels 1,1,0,0").code, 2);
  EXPECT_EQ(run("permweights --rank 4 --level 1 --labels 1,0,0").code, 2);
  EXPECT_EQ(run("permweights --rank 4 --level 1 --labels a,0,0,0").code, 2);
  EXPECT_EQ(run("permweights --rank 9 --level 1").code, 2);
  EXPECT_EQ(run("character --rank 4 --max-depth 2 --truncate 3").code, 2);
  EXPECT_EQ(run("permweights --method bogus").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, Character) {
  auto r = run("character --rank 4 --level 1 --labels 0,0,0,0 --max-depth 7");
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["chi"]["coeffs"].dump(), R"(["1","24","124","500","1625","4752","12524","31000"])");
  EXPECT_EQ(j["algebra"], "A4(1)");
  EXPECT_EQ(j["anomaly"], "-1");

  r = run("character --rank 4 --level 1 --labels 0,0,0,0 --max-depth 2");
  EXPECT_EQ(Json::parse(r.out)["chi"]["coeffs"].dump(), R"(["1","24","124"])");

  r = run("character --rank 2 --level 1 --labels 0,0 --max-depth 0");
  EXPECT_EQ(Json::parse(r.out)["chi"]["coeffs"].dump(), R"(["1"])");

  r = run("character --rank 4 --max-depth 4 --truncate 2 --format csv");
  EXPECT_EQ(r.out, "order,value\n0,1\n1,24\n2,124\n");
}

TEST(Cli, EnvironmentDefaultFormat) {
  const std::string cmd = "AFFCHAR_FORMAT=csv " + std::string(AFFCHAR_CLI_PATH) + " character --rank 4 --max-depth 1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[256];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  pclose(pipe);
  EXPECT_EQ(out, "order,value\n0,1\n1,24\n");
}

TEST(Cli, Oracle) {
  const auto r = run("oracle --rank 4 --level 1 --shells 2");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["guaranteed_order"], 7);
  EXPECT_EQ(j["chi"]["coeffs"].dump(), R"(["1","24","124","500","1625","4752","12524","31000"])");
  EXPECT_EQ(j["t_numerator"][0]["series"]["coeffs"][2], "-200");
  EXPECT_EQ(j["t_denominator"][1]["series"]["coeffs"][16], "173901");
}

TEST(Cli, Theta) {
  const auto r = run("theta --rank 4 --truncate 8");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["theta"]["coeffs"].dump(), R"(["1","20","30","60","60","120","40","180","150"])");
  EXPECT_EQ(j["basic_character"]["coeffs"][7], "31000");
}

TEST(Cli, CompareBasicA4) {
  const auto out = temp_file("compare.json");
  const auto r = run("compare --rank 4 --level 1 --labels 0,0,0,0 --max-depth 8 --shells 2 --out " + out.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  std::ifstream in(out);
  const Json j = Json::parse(in);
  std::filesystem::remove(out);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["guaranteed_order"], 7);
  EXPECT_TRUE(j["rows"][8]["oracle"].is_null());
  EXPECT_EQ(j["rows"][8]["eta_quotient"], j["rows"][8]["permutation"]);
}

TEST(Cli, CompareA2) {
  EXPECT_EQ(run("compare --rank 2 --level 1 --labels 0,0 --max-depth 5 --shells 2").code, 0);
  EXPECT_EQ(run("compare --rank 3 --level 2 --labels 1,0,1 --max-depth 6 --shells 3").code, 0);
}

TEST(Cli, CompareCorruptedFixture) {
  const auto fixture = temp_file("fixture.json");
  {
    std::ofstream f(fixture);
    f << R"({"trunc":4,"coeffs":["1","24","124","501","1625"]})";
  }
  const auto r = run("compare --rank 4 --level 1 --max-depth 6 --fixture " + fixture.string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("first differing order 3"), std::string::npos);

  {
    std::ofstream f(fixture);
    f << R"({"trunc":4,"coeffs":["1","24","124","500","1625"]})";
  }
  EXPECT_EQ(run("compare --rank 4 --level 1 --max-depth 6 --fixture " + fixture.string()).code, 0);
  std::filesystem::remove(fixture);
}

TEST(Cli, Deterministic) {
  const std::string args = "permweights --rank 3 --level 2 --labels 0,1,0 --max-depth 8";
  EXPECT_EQ(run(args).out, run(args).out);
  const std::string cmp = "compare --rank 3 --level 1 --max-depth 6";
  EXPECT_EQ(run(cmp).out, run(cmp).out);
}
