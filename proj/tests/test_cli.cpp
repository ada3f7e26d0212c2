#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = zigzag::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(ZIGZAG_TEST_DATA_DIR) + "/" + name; }

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv(zigzag::cli::kFormatEnv); }
  void TearDown() override { unsetenv(zigzag::cli::kFormatEnv); }
};

}  // namespace

TEST_F(CliTest, EntringerCsv) {
  const CliRun r = run({"entringer", "--rows", "5", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n0,1\n0,1,1\n0,1,2,2\n0,2,4,5,5\n0,5,10,14,16,16\n");
}

TEST_F(CliTest, EntringerTextAndJson) {
  EXPECT_EQ(run({"entringer", "--rows", "2"}).out, "1\n0 1\n0 1 1\n");
  const auto j = nlohmann::json::parse(run({"entringer", "--rows", "3", "--format", "json"}).out);
  EXPECT_EQ(j["rows"][3][3], "2");
}

TEST_F(CliTest, AndreTable) {
  const CliRun r = run({"andre", "--max-n", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("5  16\n6  61\n"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.substr(r.out.size() - 6), "6  61\n");
  const CliRun c = run({"andre", "--max-n", "3", "--format", "csv"});
  EXPECT_EQ(c.out, "n,A_n\n0,1\n1,1\n2,1\n3,2\n");
}

TEST_F(CliTest, Enumerate) {
  EXPECT_EQ(run({"enumerate", "--class", "sn", "--size", "3"}).out, "1 3 2\n2 3 1\n");
  EXPECT_EQ(run({"enumerate", "--class", "dn", "--size", "2"}).out, "2 1\n");
  EXPECT_EQ(run({"enumerate", "--class", "cn", "--size", "0"}).out, "\n");
  const CliRun s = run({"enumerate", "--class", "ascending", "--size", "4", "--stat",
                     "peaks_with_final", "--format", "csv"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out.substr(0, s.out.find('\n')), "permutation,peaks_with_final");
  EXPECT_NE(s.out.find("1 3 2 4,2\n"), std::string::npos) << s.out;
  const auto j = nlohmann::json::parse(
      run({"enumerate", "--class", "sn", "--size", "3", "--format", "json"}).out);
  EXPECT_EQ(j["permutations"].size(), 2u);
}

TEST_F(CliTest, Weights) {
  const CliRun r = run({"weights", "--class", "sn", "--max-n", "2", "--stat", "interior_peaks",
                     "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,size,weight\n0,1,1\n1,3,2*w\n2,5,16*w^2\n");
  const CliRun d = run({"weights", "--class", "dn", "--max-n", "1", "--stat", "interior_valleys"});
  EXPECT_EQ(d.out, "n  size  weight\n0  0  1\n1  2  1\n");
}

TEST_F(CliTest, Jacobi) {
  const CliRun r = run({"jacobi", "--max-n", "2", "--format", "csv"});
  EXPECT_EQ(r.out, "n,s_n,c_n,d_n\n0,1,1,1\n1,-1 - m,-1,-m\n2,1 + 14*m + m^2,1 + 4*m,4*m + m^2\n");
  const CliRun at = run({"jacobi", "--max-n", "2", "--at", "m=1", "--format", "csv"});
  EXPECT_EQ(at.out, "n,s_n,c_n,d_n\n0,1,1,1\n1,-2,-1,-1\n2,16,5,5\n");
  EXPECT_EQ(run({"jacobi", "--max-n", "2", "--at", "k=1"}).code, 1);
  EXPECT_EQ(run({"jacobi", "--max-n", "2", "--at", "m=1/0"}).code, 1);
}

TEST_F(CliTest, CfracBuiltin) {
  const CliRun r = run({"cfrac", "--scheme", "tan-classical", "--depth", "1", "--order", "5",
                     "--format", "csv"});
  EXPECT_EQ(r.out, "power,coefficient\n0,0\n1,1\n2,0\n3,1/3\n4,0\n5,1/9\n");
  const CliRun sym = run({"cfrac", "--scheme", "elliptic-paper", "--depth", "1", "--order", "3"});
  EXPECT_NE(sym.out.find("3  1/3*m"), std::string::npos) << sym.out;
  const CliRun at = run({"cfrac", "--scheme", "elliptic-paper", "--depth", "1", "--order", "3",
                      "--at", "m=3"});
  EXPECT_NE(at.out.find("3  1\n"), std::string::npos) << at.out;
}

TEST_F(CliTest, CfracSchemeFile) {
  const CliRun multi = run({"cfrac", "--scheme-file", data("schemes.json"), "--scheme",
                         "tan-again", "--depth", "1", "--order", "5", "--format", "json"});
  EXPECT_EQ(multi.code, 0) << multi.err;
  const auto j = nlohmann::json::parse(multi.out);
  EXPECT_EQ(j["coefficients"][5], "1/9");
  EXPECT_EQ(run({"cfrac", "--scheme-file", data("schemes.json"), "--depth", "1", "--order",
                 "5"}).code,
            1);
  const CliRun single = run({"cfrac", "--scheme-file", data("single_scheme.json"), "--depth",
                          "2", "--order", "4", "--format", "csv"});
  EXPECT_EQ(single.out, "power,coefficient\n0,1\n1,0\n2,-1\n3,0\n4,2\n");
  EXPECT_EQ(run({"cfrac", "--scheme-file", data("missing.json"), "--depth", "1", "--order",
                 "3"}).code,
            1);
}

TEST_F(CliTest, CfracUsageErrors) {
  EXPECT_EQ(run({"cfrac", "--depth", "1", "--order", "3"}).code, 1);
  EXPECT_EQ(run({"cfrac", "--scheme", "nope", "--depth", "1", "--order", "3"}).code, 1);
  EXPECT_EQ(run({"cfrac", "--scheme", "tan-classical", "--depth", "1", "--order", "41"}).code, 1);
}

TEST_F(CliTest, VerifySelected) {
  const CliRun r = run({"verify", "--claims", "ENT-TABLE,BIJ-RT", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["claims"].size(), 2u);
  EXPECT_EQ(j["claims"][0]["claim_id"], "ENT-TABLE");
  EXPECT_EQ(j["claims"][1]["checked"], 8226);
}

TEST_F(CliTest, VerifyCapsStrictAndJobs) {
  const CliRun r = run({"verify", "--caps", "size=7,order=16", "--caps", "depth=4", "--strict",
                     "--jobs", "2", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("CF-TAN,CF-TAN,pass"), std::string::npos);
  EXPECT_EQ(run({"verify", "--caps", "size=13"}).code, 1);
  EXPECT_EQ(run({"verify", "--caps", "size"}).code, 1);
  EXPECT_EQ(run({"verify", "--caps", "size=x"}).code, 1);
  EXPECT_EQ(run({"verify", "--caps", "bogus=1"}).code, 1);
  EXPECT_EQ(run({"verify", "--claims", "NOPE"}).code, 1);
  EXPECT_EQ(run({"verify", "--jobs", "0"}).code, 1);
}

TEST_F(CliTest, ReportToFileIsDeterministic) {
  const std::string a = temp_path("zigzag_report_a.json");
  const std::string b = temp_path("zigzag_report_b.json");
  EXPECT_EQ(run({"report", "--out", a, "--format", "json"}).code, 0);
  EXPECT_EQ(run({"report", "--out", b, "--format", "json"}).code, 0);
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(run({"report", "--format", "json"}).code, 1);
  EXPECT_EQ(run({"report", "--out", "/nonexistent/dir/x.json"}).code, 1);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_F(CliTest, ReportTextAndCsv) {
  const std::string t = temp_path("zigzag_report.txt");
  EXPECT_EQ(run({"report", "--out", t, "--format", "text", "--claims", "AA-RATIO"}).code, 0);
  EXPECT_NE(slurp(t).find("== Secant-tangent numbers =="), std::string::npos);
  EXPECT_EQ(run({"report", "--out", t, "--format", "csv", "--caps", "andre=6", "--claims",
                 "AA-REC"}).code,
            0);
  EXPECT_EQ(slurp(t).substr(0, 8), "claim_id");
  std::filesystem::remove(t);
}

TEST_F(CliTest, FormatFromEnvironment) {
  setenv(zigzag::cli::kFormatEnv, "csv", 1);
  EXPECT_EQ(run({"andre", "--max-n", "1"}).out, "n,A_n\n0,1\n1,1\n");
  EXPECT_EQ(run({"andre", "--max-n", "1", "--format", "text"}).out, "n  A_n\n0  1\n1  1\n");
  setenv(zigzag::cli::kFormatEnv, "yaml", 1);
  EXPECT_EQ(run({"andre", "--max-n", "1"}).code, 1);
}

TEST_F(CliTest, OutFlagForTables) {
  const std::string p = temp_path("zigzag_andre.csv");
  const CliRun r = run({"andre", "--max-n", "2", "--format", "csv", "--out", p});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(p), "n,A_n\n0,1\n1,1\n2,1\n");
  std::filesystem::remove(p);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"entringer"}).code, 1);
  EXPECT_EQ(run({"entringer", "--rows", "-1"}).code, 1);
  EXPECT_EQ(run({"entringer", "--rows", "501"}).code, 1);
  EXPECT_EQ(run({"enumerate", "--class", "xx", "--size", "3"}).code, 1);
  EXPECT_EQ(run({"enumerate", "--class", "sn", "--size", "13"}).code, 1);
  EXPECT_EQ(run({"enumerate", "--class", "sn", "--size", "3", "--stat", "bad"}).code, 1);
  EXPECT_EQ(run({"weights", "--class", "sn", "--max-n", "2"}).code, 1);
  EXPECT_EQ(run({"andre", "--max-n", "0"}).code, 1);
  const CliRun e = run({"enumerate", "--class", "xx", "--size", "3"});
  EXPECT_NE(e.err.find("sn, cn, dn or ascending"), std::string::npos);
}

TEST_F(CliTest, HelpMentionsClassNames) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sn = up-down of odd size"), std::string::npos);
}

TEST_F(CliTest, IdenticalInvocationsIdenticalOutput) {
  const std::vector<std::string> args{"verify", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}
