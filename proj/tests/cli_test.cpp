#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "staircase/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using staircase::cli::report_json;
using staircase::cli::run;
using staircase::cli::RunReport;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("staircase_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  static RunReport exec(std::vector<std::string> args) { return run(args); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, AtomicScan) {
  const auto a = write("a.json", R"({"rows": 1, "cols": 2, "entries": [[1, 1]]})");
  const auto r = exec({"atomic-scan", "-A", a, "--bound", "5"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.payload, json::parse("[[1]]"));
  EXPECT_FALSE(r.passed);
  const auto lattice = exec({"atomic-scan", "-A", a, "--bound", "5", "--mode", "lattice", "--workers", "2"});
  EXPECT_EQ(lattice.payload, json::parse("[[1]]"));
  EXPECT_EQ(exec({"atomic-scan", "-A", a, "--bound", "5", "--mode", "cubes"}).exit_code, 2);
}

TEST_F(CliTest, Example35Passes) {
  const auto r = exec({"example35"});
  EXPECT_EQ(r.exit_code, 0);
  ASSERT_TRUE(r.passed);
  EXPECT_TRUE(*r.passed);
  EXPECT_EQ(report_json(r)["status"], "pass");
  EXPECT_EQ(r.payload["witness"], json::parse("[1,1,4,2,2,2]"));
  EXPECT_EQ(r.payload["fiber_b"].size(), 10u);
}

TEST_F(CliTest, Decompose) {
  const auto i = write("i.json", R"({"vars": 2, "gens": [[2, 0], [1, 1]]})");
  const auto r = exec({"decompose", "-I", i});
  EXPECT_EQ(r.exit_code, 0);
  ASSERT_EQ(r.payload.size(), 2u);
  EXPECT_EQ(r.payload[0]["prime"], json::parse("[0, 1]"));
  EXPECT_EQ(r.payload[0]["gens"], json::parse("[[0, 1], [2, 0]]"));
  EXPECT_EQ(r.payload[1]["prime"], json::parse("[0]"));
  EXPECT_EQ(r.payload[1]["gens"], json::parse("[[1, 0]]"));

  const auto primes = exec({"decompose", "-I", i, "--kind", "primes"});
  EXPECT_EQ(primes.exit_code, 0);
  const auto unit = write("u.json", R"({"vars": 2, "gens": [[0, 0]]})");
  EXPECT_EQ(exec({"decompose", "-I", unit}).exit_code, 2);
}

TEST_F(CliTest, IdealOps) {
  const auto i = write("i.json", R"({"vars": 2, "gens": [[2, 0], [1, 1], [3, 3]]})");
  const auto j = write("j.json", R"({"vars": 2, "gens": [[1, 0]]})");
  EXPECT_EQ(exec({"ideal", "-I", i}).payload, json::parse(R"({"vars": 2, "gens": [[1, 1], [2, 0]]})"));
  EXPECT_EQ(exec({"ideal", "-I", i, "--op", "member", "--monomial", "3,0"}).payload["member"], true);
  EXPECT_EQ(exec({"ideal", "-I", i, "--op", "member", "--monomial", "0,3"}).payload["member"], false);
  EXPECT_EQ(exec({"ideal", "-I", i, "-J", j, "--op", "contains"}).payload["contains"], false);
  EXPECT_EQ(exec({"ideal", "-I", j, "-J", i, "--op", "contains"}).payload["contains"], true);
  EXPECT_EQ(exec({"ideal", "-I", i, "--op", "contains"}).exit_code, 2);
  EXPECT_EQ(exec({"ideal", "-I", i, "--op", "member", "--monomial", "1,-1"}).exit_code, 2);
}

TEST_F(CliTest, FamiliesAndChains) {
  const auto f = write("f.json", R"([{"vars": 2, "gens": [[1, 0]]}, {"vars": 2, "gens": [[1, 0], [0, 1]]}])");
  const auto pair = exec({"antichain", "-F", f, "--op", "pair"});
  EXPECT_EQ(pair.payload["pair"], json::parse("[0, 1]"));
  const auto chain = exec({"chain", "-F", f});
  EXPECT_EQ(chain.payload["length"], 2);
  EXPECT_EQ(chain.payload["chain"], json::parse("[1, 0]"));
  const auto mixed = write("m.json", R"([{"vars": 2, "gens": [[1, 0]]}, {"vars": 3, "gens": [[1, 0, 0]]}])");
  const auto bad = exec({"antichain", "-F", mixed});
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_NE(bad.summary.find("$[1].vars"), std::string::npos) << bad.summary;
}

TEST_F(CliTest, FiberSplit) {
  const auto a = write("a.json", R"({"rows": 1, "cols": 2, "entries": [[1, 1]]})");
  const auto r = exec({"fiber", "-A", a, "-b", "2", "--split", "1", "--atomic"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.payload["vertices"], json::parse("[[0, 2], [2, 0]]"));
  EXPECT_EQ(r.payload["split"]["minkowski"], true);
  EXPECT_EQ(r.payload["atomic"], false);
  EXPECT_EQ(exec({"fiber", "-A", a, "-b", "2", "--split", "3"}).exit_code, 2);
  EXPECT_EQ(exec({"fiber", "-A", a, "-b", "2,1"}).exit_code, 2);
}

TEST_F(CliTest, SagbiLiftYoung) {
  const auto a = write("a.json", R"({"rows": 1, "cols": 2, "entries": [[1, 1]]})");
  EXPECT_EQ(exec({"sagbi", "-A", a, "--coeffs", "2,-3", "--bound", "4"}).payload,
            json::parse(R"([{"degree": [1], "k": "1"}])"));
  EXPECT_EQ(exec({"sagbi", "-A", a, "--coeffs", "2,0", "--bound", "4"}).exit_code, 2);

  const auto g = write("g.json", R"({"rows": 1, "cols": 2, "entries": [[2, 3]]})");
  EXPECT_EQ(exec({"lift", "-G", g, "--degree", "2", "--bound", "3"}).payload["gens"], json::parse("[[0, 2], [1, 0]]"));

  const auto p = write("p.json", R"({"vars": 2, "points": [[0, 0], [1, 0], [0, 1]]})");
  const auto ideal = exec({"young", "--to-ideal", "-P", p});
  EXPECT_EQ(ideal.payload["gens"], json::parse("[[0, 2], [1, 1], [2, 0]]"));
  const auto i = write("i.json", ideal.payload.dump());
  EXPECT_EQ(exec({"young", "--to-order-ideal", "-I", i}).payload, json::parse(R"({"vars": 2, "points": [[0, 0], [0, 1], [1, 0]]})"));
  const auto hole = write("hole.json", R"({"vars": 2, "points": [[1, 0]]})");
  EXPECT_EQ(exec({"young", "--to-ideal", "-P", hole}).exit_code, 2);
}

TEST_F(CliTest, Posetx) {
  const auto anti = exec({"posetx", "--check-antichain", "20"});
  EXPECT_EQ(anti.exit_code, 0);
  EXPECT_EQ(report_json(anti)["status"], "pass");
  const auto chains = exec({"posetx", "--chain-bound", "8"});
  EXPECT_EQ(chains.exit_code, 0);
  EXPECT_EQ(chains.payload["within_bound"], true);
}

TEST_F(CliTest, Hilbert) {
  const auto i = write("i.json", R"({"vars": 2, "gens": [[2, 0], [1, 1]]})");
  const auto r = exec({"hilbert", "-I", i, "--table", "2"});
  EXPECT_EQ(r.payload["numerator"], json::parse("[[[0,0],1],[[1,1],-1],[[2,0],-1],[[2,1],1]]"));
  const auto d = write("d.json", R"({"rows": 1, "cols": 2, "entries": [[1, 1]]})");
  EXPECT_EQ(exec({"hilbert", "-I", i, "-D", d}).exit_code, 0);
}

TEST_F(CliTest, OutputIsDeterministic) {
  const auto a = write("a.json", R"({"rows": 2, "cols": 3, "entries": [[1, 1, 1], [0, 1, 2]]})");
  const std::vector<std::string> args{"atomic-scan", "-A", a, "--bound", "4", "--mode", "lattice"};
  const auto first = report_json(exec(args)).dump();
  for (int k = 0; k < 3; ++k) EXPECT_EQ(report_json(exec(args)).dump(), first);
  EXPECT_EQ(report_json(exec({"example35"})).dump(), report_json(exec({"example35"})).dump());
}

TEST_F(CliTest, ParseErrorsCarryThePath) {
  const auto neg = write("neg.json", R"({"vars": 2, "gens": [[2, 0], [1, -1]]})");
  const auto r = exec({"decompose", "-I", neg});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.summary.find("neg.json:$.gens[1][1]"), std::string::npos) << r.summary;

  const auto broken = write("broken.json", R"({"vars": 2, "gens": [[2, 0])");
  const auto b = exec({"decompose", "-I", broken});
  EXPECT_EQ(b.exit_code, 2);
  EXPECT_NE(b.summary.find("broken.json"), std::string::npos);

  const auto missing = exec({"decompose", "-I", (dir_ / "absent.json").string()});
  EXPECT_EQ(missing.exit_code, 2);

  const auto ragged = write("ragged.json", R"({"rows": 2, "cols": 2, "entries": [[1, 1], [1]]})");
  const auto m = exec({"atomic-scan", "-A", ragged, "--bound", "2"});
  EXPECT_EQ(m.exit_code, 2);
  EXPECT_NE(m.summary.find("$.entries[1]"), std::string::npos) << m.summary;
}

TEST_F(CliTest, UsageErrorsAndHelp) {
  EXPECT_EQ(exec({"decompose", "--bogus"}).exit_code, 2);
  EXPECT_EQ(exec({"frobnicate"}).exit_code, 2);
  EXPECT_EQ(exec({}).exit_code, 2);
  const auto help = exec({"--help"});
  EXPECT_EQ(help.exit_code, 0);
  EXPECT_NE(help.help.find("atomic-scan"), std::string::npos);
  const auto sub = exec({"fiber", "--help"});
  EXPECT_EQ(sub.exit_code, 0);
  EXPECT_NE(sub.help.find("--split"), std::string::npos);
}
