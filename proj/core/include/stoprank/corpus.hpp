#pragma once

// Text ingestion: load UTF-8 files, tokenize, count word types and rank them.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stoprank/rank_mapping.hpp"

namespace stoprank {

class StopwordList;

struct TokenizationRules {
  bool lowercase = true;
  /// Split on every non-letter code point. When false, tokens are maximal
  /// runs of non-whitespace and keep their punctuation.
  bool strip_punctuation = true;
  /// Keep an apostrophe (', U+2019, U+02BC) that sits between two letters,
  /// normalized to ASCII '. Needed to match contractions such as "don't".
  bool keep_internal_apostrophes = true;
  /// Tokens shorter than this many code points are dropped. Must be >= 1.
  std::size_t min_token_length = 1;
};

/// Reads a UTF-8 file. With `strip_boilerplate`, text outside Project
/// Gutenberg "*** START OF ..." / "*** END OF ..." marker lines is dropped,
/// but only when both markers are present in that order.
/// Throws Error{io} or Error{encoding}; messages carry the path.
std::string load_text(const std::filesystem::path& path, bool strip_boilerplate = false);

/// Boilerplate stripping on an in-memory string (see load_text).
std::string strip_gutenberg_boilerplate(std::string_view text);

std::vector<std::string> tokenize(std::string_view text, const TokenizationRules& rules = {});

class TokenCountTable {
 public:
  using Entries = std::map<std::string, std::uint64_t, std::less<>>;

  TokenCountTable() = default;
  /// Throws Error{invalid_argument} if any count is zero.
  explicit TokenCountTable(Entries entries);

  const Entries& entries() const noexcept { return entries_; }
  std::uint64_t total_tokens() const noexcept { return total_tokens_; }
  std::size_t total_types() const noexcept { return entries_.size(); }
  std::uint64_t count(std::string_view word) const;
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const TokenCountTable&, const TokenCountTable&) = default;

 private:
  Entries entries_;
  std::uint64_t total_tokens_ = 0;
};

TokenCountTable count_tokens(std::span<const std::string> tokens);

struct RankRecord {
  std::uint64_t rank = 0;
  std::string word;
  std::uint64_t count = 0;

  friend bool operator==(const RankRecord&, const RankRecord&) = default;
};

/// Immutable rank-frequency table. Invariants (checked on construction):
/// ranks are exactly 1..r_max, counts are >= 1 and non-increasing in rank,
/// and words are unique. An empty table is valid (r_max == 0).
class RankFrequencyTable {
 public:
  RankFrequencyTable() = default;
  explicit RankFrequencyTable(std::vector<RankRecord> records);

  std::span<const RankRecord> records() const noexcept { return records_; }
  std::size_t r_max() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  /// 1-based access. Throws Error{invalid_argument} when out of range.
  const RankRecord& at_rank(std::uint64_t rank) const;

  friend bool operator==(const RankFrequencyTable&, const RankFrequencyTable&) = default;

 private:
  std::vector<RankRecord> records_;
};

/// Sorts by count descending, ties by word ascending (bytewise), and
/// assigns ranks 1..n. Throws Error{precondition} on an empty table.
RankFrequencyTable rank(const TokenCountTable& table);

/// load_text + tokenize + count_tokens + rank.
RankFrequencyTable rank_file(const std::filesystem::path& path,
                             const TokenizationRules& rules = {},
                             bool strip_boilerplate = false);

struct Partition {
  RankFrequencyTable stopwords;
  RankMapping stopword_mapping;
  RankFrequencyTable others;
  RankMapping other_mapping;
};

/// Splits a table into stopwords and non-stopwords, re-ranking each part
/// 1..size while keeping counts and relative order.
Partition partition(const RankFrequencyTable& table, const StopwordList& list);

/// Inverse of partition: interleaves both parts back by original rank.
RankFrequencyTable merge(const Partition& parts);

}  // namespace stoprank
