#include "stoprank/stoplists.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "stoprank/corpus.hpp"
#include "stoprank/error.hpp"
#include "utf8.hpp"

namespace stoprank {

namespace detail {
extern const std::string_view kCommon123Text;
extern const std::string_view kSpacy305Text;
extern const std::string_view kSnowball175Text;
}  // namespace detail

std::string normalize_word(std::string_view word) {
  std::size_t begin = 0;
  std::size_t end = word.size();
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; };
  while (begin < end && space(word[begin])) ++begin;
  while (end > begin && space(word[end - 1])) --end;
  return utf8::to_lower(word.substr(begin, end - begin));
}

StopwordList::StopwordList(std::string name, const std::vector<std::string>& words) : name_(std::move(name)) {
  for (const auto& w : words) {
    auto n = normalize_word(w);
    if (!n.empty()) words_.insert(std::move(n));
  }
}

StopwordList::StopwordList(std::string name, std::initializer_list<std::string_view> words)
    : name_(std::move(name)) {
  for (auto w : words) {
    auto n = normalize_word(w);
    if (!n.empty()) words_.insert(std::move(n));
  }
}

const std::vector<std::string>& bundled_names() {
  static const std::vector<std::string> names{"common123", "spacy305", "snowball175"};
  return names;
}

StopwordList bundled(std::string_view name) {
  std::string_view text;
  if (name == "common123") {
    text = detail::kCommon123Text;
  } else if (name == "spacy305") {
    text = detail::kSpacy305Text;
  } else if (name == "snowball175") {
    text = detail::kSnowball175Text;
  } else {
    throw Error(ErrorKind::not_found,
                "unknown bundled stopword list '" + std::string(name) +
                    "' (expected common123, spacy305 or snowball175)");
  }
  if (const char* dir = std::getenv("STOPRANK_DATA_DIR"); dir != nullptr && *dir != '\0') {
    auto list = load_list(std::filesystem::path(dir) / "stoplists" / (std::string(name) + ".txt"));
    return StopwordList(std::string(name), std::vector<std::string>(list.words().begin(), list.words().end()));
  }
  return parse_list(text, std::string(name));
}

StopwordList intersect(const StopwordList& a, const StopwordList& b) {
  StopwordList::Words out;
  std::set_intersection(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end(),
                        std::inserter(out, out.end()));
  return StopwordList(a.name_ + "&" + b.name_, std::move(out), StopwordList::Normalized{});
}

StopwordList difference(const StopwordList& a, const StopwordList& b) {
  StopwordList::Words out;
  std::set_difference(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end(),
                      std::inserter(out, out.end()));
  return StopwordList(a.name_ + "-" + b.name_, std::move(out), StopwordList::Normalized{});
}

StopwordList unite(const StopwordList& a, const StopwordList& b) {
  StopwordList::Words out;
  std::set_union(a.words_.begin(), a.words_.end(), b.words_.begin(), b.words_.end(),
                 std::inserter(out, out.end()));
  return StopwordList(a.name_ + "|" + b.name_, std::move(out), StopwordList::Normalized{});
}

StopwordList parse_list(std::string_view text, std::string name) {
  std::vector<std::string> words;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto word = normalize_word(text.substr(pos, eol - pos));
    if (!word.empty() && word.front() != '#') words.push_back(word);
    pos = eol + 1;
  }
  return StopwordList(std::move(name), words);
}

StopwordList load_list(const std::filesystem::path& path) {
  return parse_list(load_text(path), path.stem().string());
}

void save_list(const StopwordList& list, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot write '" + path.string() + "'");
  out << "# " << list.name() << " (" << list.size() << " words)\n";
  for (const auto& w : list.words()) out << w << '\n';
  if (!out) throw Error(ErrorKind::io, "error while writing '" + path.string() + "'");
}

StopwordList resolve_list(std::string_view name_or_path) {
  const auto& names = bundled_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) return bundled(name_or_path);
  return load_list(std::filesystem::path(name_or_path));
}

}  // namespace stoprank
