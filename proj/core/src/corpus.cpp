#include "stoprank/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_set>

#include "stoprank/error.hpp"
#include "stoprank/stoplists.hpp"
#include "utf8.hpp"

namespace stoprank {

namespace {

std::string ascii_upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>((c >= 'a' && c <= 'z') ? c - 32 : c);
  });
  return out;
}

bool is_marker_line(std::string_view line, std::string_view which) {
  const auto first = line.find_first_not_of(" \t");
  if (first == std::string_view::npos || line.substr(first, 3) != "***") return false;
  const std::string upper = ascii_upper(line);
  return upper.find(which) != std::string::npos && upper.find("PROJECT GUTENBERG") != std::string::npos;
}

}  // namespace

std::string strip_gutenberg_boilerplate(std::string_view text) {
  std::size_t body_begin = std::string_view::npos;
  std::size_t body_end = std::string_view::npos;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    const std::size_t next = (eol == std::string_view::npos) ? text.size() : eol + 1;
    const std::string_view line = text.substr(pos, next - pos);
    if (body_begin == std::string_view::npos) {
      if (is_marker_line(line, "START OF")) body_begin = next;
    } else if (is_marker_line(line, "END OF")) {
      body_end = pos;
      break;
    }
    pos = next;
  }
  if (body_begin == std::string_view::npos || body_end == std::string_view::npos) {
    return std::string(text);
  }
  return std::string(text.substr(body_begin, body_end - body_begin));
}

std::string load_text(const std::filesystem::path& path, bool strip_boilerplate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path.string() + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorKind::io, "error while reading '" + path.string() + "'");

  if (const auto bad = utf8::first_invalid_byte(text)) {
    throw Error(ErrorKind::encoding,
                "'" + path.string() + "' is not valid UTF-8 (byte offset " + std::to_string(*bad) + ")");
  }
  return strip_boilerplate ? strip_gutenberg_boilerplate(text) : text;
}

std::vector<std::string> tokenize(std::string_view text, const TokenizationRules& rules) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t current_len = 0;

  auto flush = [&] {
    if (current_len >= std::max<std::size_t>(rules.min_token_length, 1)) {
      tokens.push_back(std::move(current));
    }
    current.clear();
    current_len = 0;
  };
  auto push = [&](char32_t cp) {
    utf8::append(current, rules.lowercase ? utf8::to_lower(cp) : cp);
    ++current_len;
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto d = utf8::decode(text, pos);
    const char32_t cp = d.code_point;
    pos += d.length;

    if (!rules.strip_punctuation) {
      if (utf8::is_whitespace(cp)) {
        flush();
      } else {
        push(cp);
      }
      continue;
    }

    if (utf8::is_letter(cp)) {
      push(cp);
      continue;
    }
    if (rules.keep_internal_apostrophes && utf8::is_apostrophe(cp) && current_len > 0 &&
        pos < text.size() && utf8::is_letter(utf8::decode(text, pos).code_point)) {
      current.push_back('\'');
      ++current_len;
      continue;
    }
    flush();
  }
  flush();
  return tokens;
}

TokenCountTable::TokenCountTable(Entries entries) : entries_(std::move(entries)) {
  for (const auto& [word, n] : entries_) {
    if (n == 0) throw Error(ErrorKind::invalid_argument, "token count for '" + word + "' is zero");
    total_tokens_ += n;
  }
}

std::uint64_t TokenCountTable::count(std::string_view word) const {
  const auto it = entries_.find(word);
  return it == entries_.end() ? 0 : it->second;
}

TokenCountTable count_tokens(std::span<const std::string> tokens) {
  TokenCountTable::Entries entries;
  for (const auto& t : tokens) {
    auto it = entries.find(std::string_view(t));
    if (it == entries.end()) {
      entries.emplace(t, 1);
    } else {
      ++it->second;
    }
  }
  return TokenCountTable(std::move(entries));
}

RankFrequencyTable::RankFrequencyTable(std::vector<RankRecord> records) : records_(std::move(records)) {
  std::unordered_set<std::string_view> seen;
  seen.reserve(records_.size());
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    if (r.rank != i + 1) {
      throw Error(ErrorKind::invalid_argument,
                  "ranks must be 1..n without gaps; found rank " + std::to_string(r.rank) +
                      " at position " + std::to_string(i + 1));
    }
    if (r.count == 0) {
      throw Error(ErrorKind::invalid_argument, "count at rank " + std::to_string(r.rank) + " is zero");
    }
    if (i > 0 && r.count > records_[i - 1].count) {
      throw Error(ErrorKind::invalid_argument,
                  "counts increase between ranks " + std::to_string(i) + " and " + std::to_string(i + 1));
    }
    if (!seen.insert(r.word).second) {
      throw Error(ErrorKind::invalid_argument, "duplicate word '" + r.word + "' in rank table");
    }
  }
}

const RankRecord& RankFrequencyTable::at_rank(std::uint64_t rank) const {
  if (rank < 1 || rank > records_.size()) {
    throw Error(ErrorKind::invalid_argument,
                "rank " + std::to_string(rank) + " outside 1.." + std::to_string(records_.size()));
  }
  return records_[rank - 1];
}

RankFrequencyTable rank(const TokenCountTable& table) {
  if (table.empty()) throw Error(ErrorKind::precondition, "nothing to rank: token table is empty");

  std::vector<RankRecord> records;
  records.reserve(table.total_types());
  for (const auto& [word, n] : table.entries()) records.push_back({0, word, n});
  // entries() is already word-ordered, so a stable sort on count keeps the
  // lexicographic tie-break.
  std::stable_sort(records.begin(), records.end(),
                   [](const RankRecord& a, const RankRecord& b) { return a.count > b.count; });
  for (std::size_t i = 0; i < records.size(); ++i) records[i].rank = i + 1;
  return RankFrequencyTable(std::move(records));
}

RankFrequencyTable rank_file(const std::filesystem::path& path, const TokenizationRules& rules,
                             bool strip_boilerplate) {
  const auto tokens = tokenize(load_text(path, strip_boilerplate), rules);
  const auto counts = count_tokens(tokens);
  if (counts.empty()) throw Error(ErrorKind::precondition, "'" + path.string() + "' contains no tokens");
  return rank(counts);
}

Partition partition(const RankFrequencyTable& table, const StopwordList& list) {
  std::vector<RankRecord> stop, other;
  std::vector<RankPair> stop_map, other_map;
  for (const auto& rec : table.records()) {
    auto& part = list.contains(rec.word) ? stop : other;
    auto& map = list.contains(rec.word) ? stop_map : other_map;
    part.push_back({part.size() + 1, rec.word, rec.count});
    map.push_back({rec.rank, static_cast<double>(part.size())});
  }
  return Partition{RankFrequencyTable(std::move(stop)), RankMapping(std::move(stop_map)),
                   RankFrequencyTable(std::move(other)), RankMapping(std::move(other_map))};
}

RankFrequencyTable merge(const Partition& parts) {
  const std::size_t n = parts.stopwords.r_max() + parts.others.r_max();
  std::vector<RankRecord> records(n);
  auto place = [&](const RankFrequencyTable& part, const RankMapping& mapping) {
    if (mapping.size() != part.r_max()) {
      throw Error(ErrorKind::invalid_argument, "partition mapping does not match its table");
    }
    for (const auto& p : mapping.pairs()) {
      if (p.rank > n) throw Error(ErrorKind::invalid_argument, "mapping rank exceeds merged size");
      const auto& rec = part.at_rank(static_cast<std::uint64_t>(p.new_rank));
      records[p.rank - 1] = {p.rank, rec.word, rec.count};
    }
  };
  place(parts.stopwords, parts.stopword_mapping);
  place(parts.others, parts.other_mapping);
  return RankFrequencyTable(std::move(records));
}

}  // namespace stoprank
