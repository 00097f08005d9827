#include "stoprank/rank_mapping.hpp"

#include <cmath>
#include <string>

#include "stoprank/error.hpp"

namespace stoprank {

RankMapping::RankMapping(std::vector<RankPair> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& p = pairs_[i];
    if (p.rank < 1 || !std::isfinite(p.new_rank) || p.new_rank <= 0.0) {
      throw Error(ErrorKind::invalid_argument,
                  "rank mapping pair " + std::to_string(i) + " has a non-positive rank");
    }
    if (p.new_rank > static_cast<double>(p.rank)) {
      throw Error(ErrorKind::invalid_argument,
                  "rank mapping pair at rank " + std::to_string(p.rank) +
                      " has new rank larger than original rank");
    }
    if (i > 0 && (p.rank <= pairs_[i - 1].rank || p.new_rank <= pairs_[i - 1].new_rank)) {
      throw Error(ErrorKind::invalid_argument,
                  "rank mapping is not strictly increasing at rank " + std::to_string(p.rank));
    }
  }
}

}  // namespace stoprank
