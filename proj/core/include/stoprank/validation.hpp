#pragma once

// Direct estimate of the stopword selection probability from many corpora:
// p(r) is the share of corpora whose rank-r word is on a stopword list.

#include <cstdint>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "stoprank/corpus.hpp"
#include "stoprank/selection_model.hpp"
#include "stoprank/stoplists.hpp"

namespace stoprank {

struct ProportionPoint {
  std::uint64_t rank = 0;
  double proportion = 0.0;
  std::size_t n_corpora = 0;  // tables with at least `rank` words
  std::size_t hits = 0;       // of those, tables whose rank-r word is listed
};

struct ProportionCurve {
  std::vector<ProportionPoint> points;
};

struct BinnedPoint {
  double gmean_rank = 0.0;
  double proportion = 0.0;
  std::size_t group_size = 0;
};

/// Points for r = 1..max_rank, stopping early once no table is that long.
/// Throws Error{precondition} with fewer than two tables,
/// Error{invalid_argument} if max_rank < 1.
ProportionCurve stopword_proportion(std::span<const RankFrequencyTable> tables, const StopwordList& list,
                                    std::uint64_t max_rank = 5000);

/// Groups points with identical proportion; each group becomes one point at
/// the geometric mean of its ranks. Output is sorted by rank.
/// Throws Error{precondition} on an empty curve.
std::vector<BinnedPoint> geometric_mean_bins(const ProportionCurve& curve);

/// The curve's points unbinned, one BinnedPoint per rank.
std::vector<BinnedPoint> raw_points(const ProportionCurve& curve);

/// Least squares (untransformed) fit of prob_selected to the points over the
/// default Hill grid with refinement. Needs >= 4 points, at least one above
/// and one below 0.5, else Error{precondition}.
HillFit fit_proportion_hill(std::span<const BinnedPoint> points, const HillGrid& grid = HillGrid::defaults());

/// True if proportions strictly decrease with rank.
bool is_strictly_decreasing(std::span<const BinnedPoint> points);
/// Number of sign changes of (proportion - 0.5) along rank; points exactly
/// at 0.5 are skipped.
std::size_t count_half_crossings(std::span<const BinnedPoint> points);

/// Every *.txt file directly inside `dir`, in path order.
/// Throws Error{io} if `dir` is not a directory.
std::vector<std::filesystem::path> list_corpus_files(const std::filesystem::path& dir);

/// Ranks every file, up to `threads` at a time; results follow `files` order.
std::vector<RankFrequencyTable> rank_files(std::span<const std::filesystem::path> files,
                                           const TokenizationRules& rules = {}, bool strip_boilerplate = false,
                                           unsigned threads = 1);

}  // namespace stoprank
