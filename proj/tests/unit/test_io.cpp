#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "stoprank/error.hpp"
#include "stoprank/io.hpp"
#include "test_helpers.hpp"

using namespace stoprank;
using testing_support::make_table;
using testing_support::TempDir;

namespace {
ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no stoprank::Error thrown";
  return ErrorKind::io;
}
}  // namespace

TEST(CsvNumber, Formatting) {
  EXPECT_EQ(format_csv_number(3), "3");
  EXPECT_EQ(format_csv_number(123456789), "123456789");
  EXPECT_EQ(format_csv_number(0.5), "0.5");
  EXPECT_EQ(format_csv_number(1.0 / 3.0), "0.333333");
  EXPECT_EQ(format_csv_number(-2), "-2");
}

TEST(CsvField, Quoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
}

TEST(TableCsv, RoundTrip) {
  const auto t = make_table({{"the", 10}, {"don't", 4}, {"a,b", 4}, {"q\"uote", 1}, {"naïve", 1}});
  const auto csv = table_to_csv(t);
  EXPECT_EQ(csv.substr(0, 15), "rank,word,count");
  EXPECT_EQ(table_from_csv(csv), t);

  std::mt19937_64 rng(2);
  for (int i = 0; i < 5; ++i) {
    const auto r = testing_support::random_table(rng, 200);
    EXPECT_EQ(table_from_csv(table_to_csv(r)), r);
  }
}

TEST(TableCsv, ParseErrors) {
  EXPECT_EQ(kind_of([] { table_from_csv("rank,count\n1,3\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { table_from_csv("rank,word,count\n1,a,x\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { table_from_csv("rank,word,count\n1,a\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { table_from_csv("rank,word,count\n1,\"a,3\n"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { table_from_csv("rank,word,count\n1,a,3\n3,b,2\n"); }), ErrorKind::invalid_argument);
  try {
    table_from_csv("rank,word,count\n1,a,3\n2,b,zz\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(TableCsv, AcceptsCrlf) {
  const auto t = table_from_csv("rank,word,count\r\n1,a,3\r\n2,b,2\r\n");
  EXPECT_EQ(t, make_table({{"a", 3}, {"b", 2}}));
}

TEST(TableJson, Shape) {
  const auto j = nlohmann::json::parse(table_to_json(make_table({{"the", 5}, {"sea", 2}})));
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["word"], "sea");
  EXPECT_EQ(j[1]["rank"], 2);
  EXPECT_EQ(j[1]["count"], 2);
}

TEST(MappingCsv, RoundTrip) {
  const RankMapping m({{1, 1}, {3, 2}, {10, 2.5}});
  EXPECT_EQ(mapping_to_csv(m).substr(0, 7), "r,r_new");
  EXPECT_EQ(mapping_from_csv(mapping_to_csv(m)), m);
  EXPECT_EQ(kind_of([] { mapping_from_csv("r,r_new\n2,3\n"); }), ErrorKind::invalid_argument);
  EXPECT_EQ(kind_of([] { mapping_from_csv("a,b\n1,1\n"); }), ErrorKind::parse);
}

TEST(Reports, FitJson) {
  FitInput in;
  in.r_max = 30;
  for (int r = 1; r <= 30; ++r) in.points.push_back({static_cast<double>(r), 300.0 / r + 30 - r});
  const std::vector<FitResult> res{fit_zipf(in), fit_brf(in)};
  const auto j = nlohmann::json::parse(fit_results_to_json(res));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["model"], "zipf");
  EXPECT_DOUBLE_EQ(j[0]["params"]["alpha"].get<double>(), res[0].params.alpha);
  EXPECT_EQ(j[1]["r_max"], 30);
  EXPECT_FALSE(j[0].contains("r_max"));
  EXPECT_EQ(j[1]["n_points"], 30);

  const auto curves = fitted_curves_to_csv(in, res);
  EXPECT_EQ(curves.substr(0, 27), "model,rank,observed,fitted\n");
  EXPECT_EQ(std::count(curves.begin(), curves.end(), '\n'), 61);
}

TEST(Reports, HillJson) {
  HillReport r{{HillParams(86, 2.3), 0.25}, SelectionMode::selected, 120, 1.07};
  auto j = nlohmann::json::parse(hill_report_to_json(r));
  EXPECT_DOUBLE_EQ(j["r_mid"].get<double>(), 86);
  EXPECT_DOUBLE_EQ(j["gamma"].get<double>(), 2.3);
  EXPECT_NEAR(j["predicted_beta"].get<double>(), 1.07 / 1.3, 1e-12);
  r.fit.params = HillParams(86, 0.9);
  j = nlohmann::json::parse(hill_report_to_json(r));
  EXPECT_FALSE(j.contains("predicted_beta"));
}

TEST(Reports, ValidationCsv) {
  ProportionCurve c;
  c.points = {{1, 1.0, 4, 4}, {2, 0.25, 4, 1}};
  EXPECT_EQ(proportions_to_csv(c), "rank,proportion,n\n1,1,4\n2,0.25,4\n");
  const std::vector<BinnedPoint> b{{1.5, 0.75, 2}};
  EXPECT_EQ(bins_to_csv(b), "gmean_rank,proportion\n1.5,0.75\n");
}

TEST(Files, AtomicWriteAndRead) {
  TempDir d;
  const auto p = d.path() / "out.csv";
  write_file_atomic(p, "first");
  write_file_atomic(p, "second");
  EXPECT_EQ(read_file(p), "second");
  std::size_t n = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(d.path())) ++n;
  EXPECT_EQ(n, 1u);
  EXPECT_EQ(kind_of([&] { read_file(d.path() / "nope"); }), ErrorKind::io);
  EXPECT_EQ(kind_of([&] { write_file_atomic(d.path() / "no" / "dir.csv", "x"); }), ErrorKind::io);
}
