#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("mvzeta_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    write("one_plus_x.json", R"({"nvars": 1, "terms": [{"exp": [0], "coeff": "1"}, {"exp": [1], "coeff": "1"}]})");
    write("a3.json", R"({"rows": [[1, 1, 1, -3]]})");
    write("diag.json", R"({"rows": [[1, -1]]})");
    write("cone.json", R"({"pairs": [[2, 1], [1, 1], [0, 2]]})");
    write("bad.json", R"({"nvars": 1, "terms": [)");
  }
  void TearDown() override { fs::remove_all(dir_); }

  void write(const std::string& name, const std::string& text) { std::ofstream(dir_ / name) << text; }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args, std::string* text = nullptr) {
    args.insert(args.begin(), "mvzeta");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    int code = mvz::cli::run(static_cast<int>(argv.size()), argv.data(), out);
    last_ = out.str();
    if (text) *text = last_;
    return code;
  }
  json report() const { return json::parse(last_); }

  fs::path dir_;
  std::string last_;
};

}  // namespace

TEST_F(Cli, AnalyzeOnePlusX) {
  ASSERT_EQ(run({"analyze", "--series", path("one_plus_x.json"), "--cutoff", "8"}), 0);
  auto r = report();
  EXPECT_EQ(r["schema"], "1");
  EXPECT_EQ(r["cyclotomic_verdict"]["verdict"], "Cyclotomic");
  EXPECT_EQ(r["zeta_factors"][0]["form"], json::parse("[1]"));
  EXPECT_EQ(r["zeta_factors"][0]["gamma"], "1");
  EXPECT_EQ(r["zeta_factors"][1]["form"], json::parse("[2]"));
  EXPECT_EQ(r["zeta_factors"][1]["gamma"], "-1");
  EXPECT_EQ(r["polyhedra"]["iota"], "1/1");
}

TEST_F(Cli, ToricBuiltinA3) {
  ASSERT_EQ(run({"toric", "--builtin", "An", "--n", "3"}), 0);
  auto r = report();
  EXPECT_EQ(r["K"].size(), 3u);
  EXPECT_EQ(r["polyhedra"]["iota"], "1/1");
  EXPECT_EQ(r["An"]["alpha_star"], json::parse(R"(["1/3", "1/3", "1/3", "0/1"])"));
  EXPECT_EQ(r["An"]["d"], "6");
  EXPECT_EQ(r["An"]["degree"], 6);
  EXPECT_EQ(r["cprime_ok"], true);
  EXPECT_EQ(r["verified"], true);
}

TEST_F(Cli, ToricMatrix) {
  ASSERT_EQ(run({"toric", "--matrix", path("diag.json"), "--b", "0", "--weight", "6"}), 0);
  auto r = report();
  EXPECT_EQ(r["restricted"], false);
  EXPECT_EQ(r["K"][0]["nu"], json::parse("[1, 1]"));
  EXPECT_EQ(r["verified"], true);
}

TEST_F(Cli, CountExamples) {
  ASSERT_EQ(run({"count", "--builtin", "An", "--n", "3", "--t", "2"}), 0);
  EXPECT_EQ(report()["value"], "4");
  ASSERT_EQ(run({"count", "--matrix", path("a3.json"), "--box", "1,1,1,1"}), 0);
  EXPECT_EQ(report()["value"], "4");
  ASSERT_EQ(run({"count", "--abelian", "--a", "0", "--limit", "12"}), 0);
  EXPECT_EQ(report()["value"], true);
}

TEST_F(Cli, GroupZeta) {
  ASSERT_EQ(run({"groupzeta", "--builtin", "gsp6"}), 0);
  EXPECT_EQ(report()["beta0"], "4/1");
  EXPECT_EQ(report()["beta1"], "4/1");
  ASSERT_EQ(run({"groupzeta", "--cone", path("cone.json")}), 0);
  EXPECT_EQ(report()["alpha0"], "0/1");
  EXPECT_EQ(report()["m0"], 2);
}

TEST_F(Cli, ErrorsCarryStableCodes) {
  EXPECT_EQ(run({"analyze", "--series", path("bad.json")}), 1);
  EXPECT_EQ(report()["error"]["code"], "malformed_json");
  EXPECT_EQ(run({"count", "--matrix", path("a3.json"), "--box", "3,3"}), 1);
  EXPECT_EQ(report()["error"]["code"], "dimension_mismatch");
  EXPECT_EQ(run({"nonsense"}), 1);
  EXPECT_EQ(report()["error"]["code"], "invalid_arguments");
  EXPECT_EQ(run({"groupzeta", "--uniform", path("one_plus_x.json")}), 1);
  EXPECT_EQ(report()["error"]["code"], "dimension_mismatch");
}

TEST_F(Cli, BoundErrorsExitWithTwo) {
  EXPECT_EQ(run({"count", "--builtin", "An", "--n", "3", "--t", "1000000000"}), 2);
  EXPECT_EQ(report()["error"]["code"], "budget_exceeded");
}

TEST_F(Cli, ReportsDoNotDependOnThreads) {
  std::vector<std::vector<std::string>> commands = {
      {"analyze", "--series", path("one_plus_x.json")},
      {"toric", "--builtin", "An", "--n", "3"},
      {"count", "--matrix", path("a3.json"), "--box", "10,10,10,10"},
      {"count", "--builtin", "An", "--n", "3", "--t", "100"},
  };
  for (auto c : commands) {
    std::string one, eight;
    auto c1 = c, c8 = c;
    c1.insert(c1.end(), {"--threads", "1"});
    c8.insert(c8.end(), {"--threads", "8"});
    ASSERT_EQ(run(c1, &one), 0);
    ASSERT_EQ(run(c8, &eight), 0);
    EXPECT_EQ(one, eight) << c[0];
  }
}
