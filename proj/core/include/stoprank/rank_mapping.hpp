#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace stoprank {

/// One word's rank in the full table and its rank within a subset.
/// `new_rank` is real-valued so that expected ranks from the selection
/// model can share the type with observed (integral) ones.
struct RankPair {
  std::uint64_t rank = 0;
  double new_rank = 0.0;

  friend bool operator==(const RankPair&, const RankPair&) = default;
};

/// Pairs ordered by original rank. Invariants (checked on construction):
/// ranks strictly increasing, new ranks strictly increasing and positive,
/// and new_rank <= rank for every pair.
class RankMapping {
 public:
  RankMapping() = default;
  explicit RankMapping(std::vector<RankPair> pairs);

  std::span<const RankPair> pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  std::uint64_t max_rank() const noexcept { return pairs_.empty() ? 0 : pairs_.back().rank; }

  friend bool operator==(const RankMapping&, const RankMapping&) = default;

 private:
  std::vector<RankPair> pairs_;
};

}  // namespace stoprank
