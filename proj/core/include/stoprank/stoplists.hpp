#pragma once

#include <filesystem>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace stoprank {

/// A named set of normalized (lowercase, trimmed) words. Contractions are
/// stored verbatim with an ASCII apostrophe.
class StopwordList {
 public:
  using Words = std::set<std::string, std::less<>>;

  StopwordList() = default;
  StopwordList(std::string name, const std::vector<std::string>& words);
  StopwordList(std::string name, std::initializer_list<std::string_view> words);

  const std::string& name() const noexcept { return name_; }
  const Words& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  bool contains(std::string_view word) const { return words_.find(word) != words_.end(); }

  /// Set equality; names are ignored.
  friend bool operator==(const StopwordList& a, const StopwordList& b) { return a.words_ == b.words_; }

 private:
  struct Normalized {};
  StopwordList(std::string name, Words words, Normalized) : name_(std::move(name)), words_(std::move(words)) {}

  std::string name_;
  Words words_;

  friend StopwordList intersect(const StopwordList&, const StopwordList&);
  friend StopwordList difference(const StopwordList&, const StopwordList&);
  friend StopwordList unite(const StopwordList&, const StopwordList&);
};

/// Lowercases and trims surrounding whitespace (the normalization applied
/// to every word that enters a StopwordList).
std::string normalize_word(std::string_view word);

/// Names accepted by bundled(): common123, spacy305, snowball175.
const std::vector<std::string>& bundled_names();

/// Returns one of the bundled lists. When the environment variable
/// STOPRANK_DATA_DIR is set, the list is read from
/// $STOPRANK_DATA_DIR/stoplists/<name>.txt instead of the compiled-in copy.
/// Throws Error{not_found} for unknown names.
StopwordList bundled(std::string_view name);

StopwordList intersect(const StopwordList& a, const StopwordList& b);
StopwordList difference(const StopwordList& a, const StopwordList& b);
StopwordList unite(const StopwordList& a, const StopwordList& b);

/// One word per line; blank lines and lines starting with '#' are skipped.
StopwordList parse_list(std::string_view text, std::string name);
StopwordList load_list(const std::filesystem::path& path);
void save_list(const StopwordList& list, const std::filesystem::path& path);

/// Accepts either a bundled name or a path to a list file.
StopwordList resolve_list(std::string_view name_or_path);

}  // namespace stoprank
