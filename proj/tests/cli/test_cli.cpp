#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "stoprank/cli.hpp"
#include "stoprank/io.hpp"
#include "test_helpers.hpp"

using stoprank::run_cli;
using testing_support::TempDir;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int s = run_cli(args, out, err);
  return {s, out.str(), err.str()};
}

const std::string kCorpus = STOPRANK_CORPUS_DIR;

std::string zipf_table_csv(int n) {
  std::string s = "rank,word,count\n";
  for (int r = 1; r <= n; ++r) s += std::to_string(r) + ",w" + std::to_string(r) + "," + std::to_string(10000 / r) + "\n";
  return s;
}

}  // namespace

TEST(Cli, UsageErrors) {
  auto r = cli({});
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(r.err.rfind("error: usage:", 0), 0u) << r.err;
  r = cli({"fit"});
  EXPECT_EQ(r.status, 2);
  r = cli({"frobnicate"});
  EXPECT_EQ(r.status, 2);
  r = cli({"simulate", "--out-prefix", "x", "--n", "0"});
  EXPECT_EQ(r.status, 2);
}

TEST(Cli, VersionAndHelp) {
  auto r = cli({"--version"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("0.1.0"), std::string::npos);
  r = cli({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("hill-fit"), std::string::npos);
}

TEST(Cli, RankWritesTable) {
  TempDir d;
  const auto in = d.write("tiny.txt", "The cat and the hat. Don't!");
  const auto out = d.path() / "tiny.csv";
  auto r = cli({"rank", "--input", in.string(), "--out", out.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto t = stoprank::table_from_csv(stoprank::read_file(out));
  EXPECT_EQ(t.at_rank(1).word, "the");
  EXPECT_EQ(t.at_rank(1).count, 2u);
  EXPECT_EQ(t.r_max(), 5u);

  // Several inputs into a directory, JSON output.
  const auto in2 = d.write("two.txt", "one two two");
  fs::create_directories(d.path() / "o");
  r = cli({"rank", "--input", in.string(), in2.string(), "--out", (d.path() / "o").string(), "--json"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(fs::exists(d.path() / "o" / "two.json"));
  const auto j = nlohmann::json::parse(stoprank::read_file(d.path() / "o" / "two.json"));
  EXPECT_EQ(j[0]["word"], "two");
}

TEST(Cli, RankReportsEachBadFile) {
  TempDir d;
  const auto good = d.write("good.txt", "words here");
  const auto bad = d.write("bad.txt", std::string("ok \xff\xfe bytes"));
  const auto r = cli({"rank", "--input", good.string(), bad.string(), (d.path() / "nope.txt").string(), "--out",
                      d.path().string()});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("error: encoding:"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("error: io:"), std::string::npos) << r.err;
  EXPECT_TRUE(fs::exists(d.path() / "good.csv"));
}

TEST(Cli, FitReportsAllModels) {
  TempDir d;
  const auto table = d.write("t.csv", zipf_table_csv(400));
  const auto out = d.path() / "fit.json";
  auto r = cli({"fit", "--table", table.string(), "--out", out.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(stoprank::read_file(out));
  ASSERT_EQ(j.size(), 4u);
  for (std::size_t i = 1; i < j.size(); ++i) EXPECT_GE(j[i - 1]["adjusted_r2"], j[i]["adjusted_r2"]);
  EXPECT_TRUE(fs::exists(d.path() / "fit.curves.csv"));

  r = cli({"fit", "--table", table.string(), "--models", "zipf", "--sample", "all"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto z = nlohmann::json::parse(r.out);
  EXPECT_EQ(z[0]["n_points"], 400);
  EXPECT_NEAR(z[0]["params"]["alpha"].get<double>(), 1.0, 0.02);

  r = cli({"fit", "--table", table.string(), "--models", "mandelbrot", "--b-grid", "0:5:1"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_LE(nlohmann::json::parse(r.out)[0]["params"]["B"].get<double>(), 5.0);

  r = cli({"fit", "--table", table.string(), "--models", "gamma"});
  EXPECT_EQ(r.status, 1);
  r = cli({"fit", "--table", (d.path() / "missing.csv").string()});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.err.rfind("error: io:", 0), 0u) << r.err;
}

TEST(Cli, FitTooFewPoints) {
  TempDir d;
  const auto table = d.write("t.csv", "rank,word,count\n1,a,5\n2,b,3\n");
  const auto r = cli({"fit", "--table", table.string(), "--models", "zipf"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.err.rfind("error: precondition:", 0), 0u) << r.err;
}

TEST(Cli, PartitionThenHillFit) {
  TempDir d;
  const auto table = d.path() / "md.csv";
  ASSERT_EQ(cli({"rank", "--input", kCorpus + "/moby_dick.txt", "--out", table.string(), "--strip-boilerplate"}).status, 0);
  const auto prefix = (d.path() / "md").string();
  auto r = cli({"partition", "--table", table.string(), "--stoplist", "common123", "--out-prefix", prefix});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto stop = stoprank::table_from_csv(stoprank::read_file(prefix + ".stopwords.csv"));
  const auto others = stoprank::table_from_csv(stoprank::read_file(prefix + ".others.csv"));
  const auto full = stoprank::table_from_csv(stoprank::read_file(table));
  EXPECT_EQ(stop.r_max() + others.r_max(), full.r_max());
  EXPECT_LE(stop.r_max(), 123u);

  r = cli({"hill-fit", "--mapping", prefix + ".stopwords.mapping.csv", "--alpha", "1.06"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j["r_mid"].get<double>(), 10);
  EXPECT_LT(j["r_mid"].get<double>(), 400);
  EXPECT_TRUE(j.contains("predicted_beta"));

  r = cli({"hill-fit", "--mapping", prefix + ".others.mapping.csv", "--mode", "complement", "--rmid-range",
           "50:150:10", "--gamma-range", "1:3:0.5", "--no-refine"});
  ASSERT_EQ(r.status, 0) << r.err;
}

TEST(Cli, HillFitEmptyMapping) {
  TempDir d;
  const auto m = d.write("m.csv", "r,r_new\n");
  const auto r = cli({"hill-fit", "--mapping", m.string()});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.err.rfind("error: precondition:", 0), 0u) << r.err;
}

TEST(Cli, SimulateDefaults) {
  TempDir d;
  const auto prefix = (d.path() / "sim").string();
  auto r = cli({"simulate", "--out-prefix", prefix});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(stoprank::read_file(prefix + ".fit.json"));
  EXPECT_EQ(j[0]["model"], "brf");
  const auto m = stoprank::mapping_from_csv(stoprank::read_file(prefix + ".mapping.csv"));
  EXPECT_GT(m.size(), 50u);

  r = cli({"simulate", "--out-prefix", prefix + "c", "--mode", "complement"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(stoprank::read_file(prefix + "c.fit.json")).size(), 3u);
}

TEST(Cli, SimulateSharpCutoff) {
  // With a step-like Hill curve only ranks strictly below the midpoint
  // survive the floor-crossing rule.
  TempDir d;
  const auto prefix = (d.path() / "s").string();
  const auto r = cli({"simulate", "--n", "10", "--gamma", "1000000", "--rmid", "5", "--out-prefix", prefix});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto m = stoprank::mapping_from_csv(stoprank::read_file(prefix + ".mapping.csv"));
  ASSERT_EQ(m.size(), 4u);
  EXPECT_EQ(m.max_rank(), 4u);
  // Four points are still enough for the two-exponent BRF.
  const auto j = nlohmann::json::parse(stoprank::read_file(prefix + ".fit.json"));
  EXPECT_EQ(j[0]["n_points"], 4);

  // Three are not; the report carries the reason instead of a fit.
  const auto r3 = cli({"simulate", "--n", "10", "--gamma", "1000000", "--rmid", "4", "--out-prefix", prefix + "3"});
  ASSERT_EQ(r3.status, 0) << r3.err;
  const auto e = nlohmann::json::parse(stoprank::read_file(prefix + "3.fit.json"));
  ASSERT_TRUE(e.contains("error"));
  EXPECT_EQ(e["error"].get<std::string>().rfind("precondition", 0), 0u);
}

TEST(Cli, ValidateErrors) {
  TempDir d;
  auto r = cli({"validate", "--corpus-dir", d.path().string(), "--out-prefix", (d.path() / "v").string()});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("no .txt files"), std::string::npos) << r.err;
  d.write("a.txt", "the sea");
  r = cli({"validate", "--corpus-dir", d.path().string(), "--out-prefix", (d.path() / "v").string()});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.err.rfind("error: precondition:", 0), 0u) << r.err;
  r = cli({"validate", "--corpus-dir", (d.path() / "none").string(), "--out-prefix", "v"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.err.rfind("error: io:", 0), 0u) << r.err;
}

TEST(Cli, ValidateOnBundledCorpus) {
  TempDir d;
  const auto prefix = (d.path() / "v").string();
  const auto r = cli({"validate", "--corpus-dir", kCorpus, "--out-prefix", prefix, "--strip-boilerplate",
                      "--max-rank", "2000"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(stoprank::read_file(prefix + ".hill.json"));
  EXPECT_EQ(j["n_corpora"], 41);
  EXPECT_TRUE(fs::exists(prefix + ".proportions.csv"));
  EXPECT_TRUE(fs::exists(prefix + ".binned.csv"));
}

TEST(Cli, ConfigFile) {
  TempDir d;
  const auto table = d.write("t.csv", zipf_table_csv(100));
  const auto cfg = d.write("c.ini", "[fit]\nmodels=\"zipf\"\nsample=\"all\"\n");
  const auto r = cli({"--config", cfg.string(), "fit", "--table", table.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["n_points"], 100);
}
