#include "infsub/cli.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  const int code = infsub::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("infsub_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string &name, const std::string &text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(const std::string &name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

TEST_F(Cli, ExpOfJordanBlock) {
  const std::string in = write("J3.json", R"({"rows":[[0,1,0],[0,0,1],[0,0,0]]})");
  const Result r = run({"exp", "--p", "5", "--in", in});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["rows"], json::parse("[[1,1,3],[0,1,1],[0,0,1]]"));
}

TEST_F(Cli, LogOfIdentityIsZero) {
  const std::string in = write("id.json", R"({"p":3,"rows":[[1,0],[0,1]]})");
  const Result r = run({"log", "--in", in});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["rows"], json::parse("[[0,0],[0,0]]"));
}

TEST_F(Cli, DomainAndUsageErrorsExitTwo) {
  const std::string nn = write("nn.json", R"({"p":5,"rows":[[1,1],[0,1]]})");
  Result r = run({"exp", "--in", nn});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not p-nilpotent"), std::string::npos);
  EXPECT_EQ(run({"exp", "--in", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"exp", "--p", "3", "--in", nn}).code, 2); // field conflict
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "bijection", "--p", "3"}).code, 2); // seed required
  EXPECT_EQ(run({"verify", "bijection", "--p", "4", "--seed", "1"}).code, 2);
  EXPECT_EQ(run({"heisenberg", "enumerate", "--p", "3", "--r", "3"}).code, 2); // capacity
  EXPECT_EQ(run({"primes", "good", "--type", "Q9", "--p", "5"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, LiftDecomposeRoundTripThroughFiles) {
  const std::string tuple = write(
      "t.json", R"({"p":3,"r":2,"layers":[{"rows":[[0,1],[0,0]]},{"rows":[[0,1],[0,0]]}]})");
  ASSERT_EQ(run({"lift", "--in", tuple, "--out", path("phi.json")}).code, 0);
  const json phi = json::parse(slurp(path("phi.json")));
  // phi_3 = (1 + tX)(1 + t^3 X): entry (0,1) is t + t^3.
  EXPECT_EQ(phi["phi"]["rows"][0][1]["coeffs"], json::parse("[0,1,0,1,0,0,0,0,0]"));
  ASSERT_EQ(run({"decompose", "--in", path("phi.json"), "--out", path("back.json")}).code, 0);
  ASSERT_EQ(run({"lift", "--in", path("back.json"), "--out", path("phi2.json")}).code, 0);
  EXPECT_EQ(slurp(path("phi.json")), slurp(path("phi2.json")));
  const Result again = run({"decompose", "--in", path("phi2.json")});
  EXPECT_EQ(again.out, slurp(path("back.json")));
}

TEST_F(Cli, DecomposeRejectsNonHomomorphism) {
  const std::string bad = write("bad.json", R"({"p":5,"phi":{"n":1,"r":1,"rows":[[{"r":1,"coeffs":[1,1,1]}]]}})");
  EXPECT_EQ(run({"decompose", "--in", bad}).code, 2);
}

TEST_F(Cli, SaturateEmitsVerificationBlock) {
  const std::string g = write("g.json", R"({"p":5,"rows":[[1,1],[0,1]]})");
  const Result r = run({"saturate", "--in", g});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["verification"]["phi_at_1_equals_g"].get<bool>());
  EXPECT_EQ(j["phi"]["rows"][0][1]["coeffs"], json::parse("[0,1,0,0,0]"));
  const std::string g3 = write("g3.json", R"({"p":5,"rows":[[1,1,0],[0,1,1],[0,0,1]]})");
  const json j3 = json::parse(run({"saturate", "--in", g3}).out);
  EXPECT_EQ(j3["phi"]["rows"][0][2]["coeffs"], json::parse("[0,2,3,0,0]")); // 2t + 3t^2
  const std::string nu = write("nu.json", R"({"p":5,"rows":[[2,0],[0,1]]})");
  EXPECT_EQ(run({"saturate", "--in", nu}).code, 2);
}

TEST_F(Cli, VerifySuitesPass) {
  for (const auto &args : std::vector<std::vector<std::string>>{
           {"verify", "bijection", "--p", "3", "--n", "3", "--r", "2", "--samples", "50", "--seed", "7"},
           {"verify", "sl2-example", "--p", "3"},
           {"verify", "dist", "--p", "3", "--r", "3"},
           {"verify", "axioms", "--p", "3", "--n", "2", "--samples", "10", "--seed", "1"},
           {"verify", "bch", "--p", "5", "--blocks", "2,1,1", "--samples", "10", "--seed", "2"},
           {"verify", "sl-n", "--p", "5", "--n", "3", "--r", "2", "--samples", "10", "--seed", "3"},
           {"verify", "saturation", "--p", "5", "--n", "3", "--samples", "10", "--seed", "4"}}) {
    const Result r = run(args);
    EXPECT_EQ(r.code, 0) << args[1] << ": " << r.err << r.out;
    EXPECT_TRUE(json::parse(r.out)["pass"].get<bool>()) << args[1];
  }
}

TEST_F(Cli, HeisenbergAndPrimes) {
  const json rep = json::parse(run({"heisenberg", "report", "--p", "3", "--r", "2"}).out);
  EXPECT_EQ(rep["hom_count"], 27);
  EXPECT_EQ(rep["tuple_count"], 81);
  EXPECT_TRUE(rep["complete_search"].get<bool>());
  const json fam = json::parse(run({"heisenberg", "family", "--p", "5", "--r", "2"}).out);
  EXPECT_EQ(fam["checked"], 125);
  EXPECT_EQ(json::parse(run({"heisenberg", "enumerate", "--p", "3", "--r", "1"}).out)["count"], 9);

  EXPECT_FALSE(json::parse(run({"primes", "pretty-good", "--datum", "SL3", "--p", "3"}).out)["pretty_good"].get<bool>());
  EXPECT_TRUE(json::parse(run({"primes", "good", "--type", "G2", "--p", "5"}).out)["good"].get<bool>());
  EXPECT_FALSE(json::parse(run({"primes", "good", "--datum", "Sp4", "--p", "2"}).out)["good"].get<bool>());
}

TEST_F(Cli, OutputIsDeterministicAcrossRunsAndJobs) {
  const std::vector<std::string> base{"verify", "bijection", "--p", "5", "--n", "3", "--r", "2",
                                      "--samples", "30", "--seed", "11"};
  auto with_jobs = [&](const std::string &jobs) {
    auto a = base;
    a.insert(a.end(), {"--jobs", jobs});
    return run(a).out;
  };
  const std::string one = with_jobs("1");
  EXPECT_EQ(one, with_jobs("1"));
  EXPECT_EQ(one, with_jobs("3"));
  setenv(infsub::kJobsEnv, "2", 1);
  EXPECT_EQ(one, run(base).out);
  unsetenv(infsub::kJobsEnv);
}
