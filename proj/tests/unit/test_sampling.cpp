#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "stoprank/error.hpp"
#include "stoprank/sampling.hpp"

using stoprank::log_even_ranks;

namespace {

// Independent construction: a set union, long double powers, floor(x + 0.5).
std::vector<std::uint64_t> oracle(std::uint64_t r_max, std::uint64_t head, long double base) {
  std::set<std::uint64_t> s;
  for (std::uint64_t r = 1; r <= head && r <= r_max; ++r) s.insert(r);
  for (int k = 1; k < 10000; ++k) {
    const auto v = static_cast<std::uint64_t>(std::floor(head * std::pow(base, k) + 0.5L));
    if (v > r_max) break;
    s.insert(v);
  }
  return {s.begin(), s.end()};
}

}  // namespace

TEST(LogEven, SmallTableIsAllHead) {
  EXPECT_EQ(log_even_ranks(5), (std::vector<std::uint64_t>{1, 2, 3, 4, 5}));
  EXPECT_EQ(log_even_ranks(1), (std::vector<std::uint64_t>{1}));
}

TEST(LogEven, BaseTwo) {
  EXPECT_EQ(log_even_ranks(100, 10, 2.0), (std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 40, 80}));
  EXPECT_EQ(log_even_ranks(100, 10, 2.0), oracle(100, 10, 2.0L));
}

TEST(LogEven, MobyDickScaleEndpoint) {
  // 10 * 1.05^155 = 19246.04 and 10 * 1.05^156 = 20208.3
  const auto r = log_even_ranks(19246);
  EXPECT_EQ(r.back(), 19246u);
  EXPECT_EQ(r, oracle(19246, 10, 1.05L));
  EXPECT_EQ(log_even_ranks(19245).back(), oracle(19245, 10, 1.05L).back());
  EXPECT_LT(log_even_ranks(19245).back(), 19246u);
}

TEST(LogEven, MatchesOracleAcrossSizes) {
  for (std::uint64_t r_max : {1u, 9u, 10u, 11u, 57u, 123u, 305u, 1000u, 17358u, 100000u}) {
    EXPECT_EQ(log_even_ranks(r_max), oracle(r_max, 10, 1.05L)) << r_max;
  }
}

TEST(LogEven, Invariants) {
  std::vector<std::uint64_t> prev;
  for (std::uint64_t r_max = 1; r_max <= 3000; r_max += 7) {
    const auto r = log_even_ranks(r_max);
    ASSERT_FALSE(r.empty());
    EXPECT_EQ(r.front(), 1u);
    EXPECT_LE(r.back(), r_max);
    for (std::size_t i = 1; i < r.size(); ++i) EXPECT_LT(r[i - 1], r[i]);
    // Growing r_max only appends.
    ASSERT_LE(prev.size(), r.size());
    EXPECT_TRUE(std::equal(prev.begin(), prev.end(), r.begin()));
    prev = r;
  }
}

TEST(LogEven, Errors) {
  EXPECT_THROW(log_even_ranks(0), stoprank::Error);
  EXPECT_THROW(log_even_ranks(10, 0), stoprank::Error);
  EXPECT_THROW(log_even_ranks(10, 10, 1.0), stoprank::Error);
  EXPECT_THROW(log_even_ranks(10, 10, 0.5), stoprank::Error);
}
