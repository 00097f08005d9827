#include "stoprank/validation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <string>
#include <thread>

#include "stoprank/error.hpp"
#include "stoprank/grid_search.hpp"
#include "refine_axis.hpp"

namespace stoprank {

ProportionCurve stopword_proportion(std::span<const RankFrequencyTable> tables, const StopwordList& list,
                                    std::uint64_t max_rank) {
  if (tables.size() < 2) {
    throw Error(ErrorKind::precondition,
                "need at least 2 corpora to estimate proportions, got " + std::to_string(tables.size()));
  }
  if (max_rank < 1) throw Error(ErrorKind::invalid_argument, "max_rank must be >= 1");

  ProportionCurve curve;
  for (std::uint64_t r = 1; r <= max_rank; ++r) {
    ProportionPoint p{r, 0.0, 0, 0};
    for (const auto& t : tables) {
      if (t.r_max() < r) continue;
      ++p.n_corpora;
      if (list.contains(t.at_rank(r).word)) ++p.hits;
    }
    if (p.n_corpora == 0) break;
    p.proportion = static_cast<double>(p.hits) / static_cast<double>(p.n_corpora);
    curve.points.push_back(p);
  }
  return curve;
}

std::vector<BinnedPoint> geometric_mean_bins(const ProportionCurve& curve) {
  if (curve.points.empty()) throw Error(ErrorKind::precondition, "proportion curve is empty");
  struct Acc {
    double log_sum = 0.0;
    std::size_t n = 0;
  };
  // Proportions are ratios of small integers, so exact equality is a sound
  // grouping key.
  std::map<double, Acc> groups;
  for (const auto& p : curve.points) {
    auto& g = groups[p.proportion];
    g.log_sum += std::log(static_cast<double>(p.rank));
    ++g.n;
  }
  std::vector<BinnedPoint> out;
  out.reserve(groups.size());
  for (const auto& [prop, g] : groups) {
    out.push_back({std::exp(g.log_sum / static_cast<double>(g.n)), prop, g.n});
  }
  std::sort(out.begin(), out.end(), [](const BinnedPoint& a, const BinnedPoint& b) {
    return a.gmean_rank < b.gmean_rank || (a.gmean_rank == b.gmean_rank && a.proportion > b.proportion);
  });
  return out;
}

std::vector<BinnedPoint> raw_points(const ProportionCurve& curve) {
  std::vector<BinnedPoint> out;
  out.reserve(curve.points.size());
  for (const auto& p : curve.points) out.push_back({static_cast<double>(p.rank), p.proportion, 1});
  return out;
}

HillFit fit_proportion_hill(std::span<const BinnedPoint> points, const HillGrid& grid) {
  if (points.size() < 4) {
    throw Error(ErrorKind::precondition,
                "proportion fit needs at least 4 points, got " + std::to_string(points.size()));
  }
  const bool above = std::any_of(points.begin(), points.end(), [](const BinnedPoint& p) { return p.proportion > 0.5; });
  const bool below = std::any_of(points.begin(), points.end(), [](const BinnedPoint& p) { return p.proportion < 0.5; });
  if (!above || !below) {
    throw Error(ErrorKind::precondition,
                "proportions do not straddle 0.5, so the midpoint rank is not identifiable");
  }
  if (grid.r_mid.empty() || grid.gamma.empty()) throw Error(ErrorKind::precondition, "Hill grid is empty");

  std::vector<double> log_r;
  log_r.reserve(points.size());
  for (const auto& p : points) {
    if (!(p.gmean_rank > 0.0)) throw Error(ErrorKind::invalid_argument, "proportion point with rank <= 0");
    log_r.push_back(std::log(p.gmean_rank));
  }
  const Objective objective = [&](std::span<const double> q) {
    const double log_mid = std::log(q[0]);
    double total = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double e = 1.0 / (1.0 + std::exp(q[1] * (log_r[i] - log_mid))) - points[i].proportion;
      total += e * e;
    }
    return total;
  };

  auto best = grid_search(objective, ParameterLattice({grid.r_mid, grid.gamma}));
  if (grid.refine) {
    auto fine = grid_search(objective,
                            ParameterLattice({detail::refine_axis(grid.r_mid, best.point[0]), detail::refine_axis(grid.gamma, best.point[1])}));
    if (fine.value < best.value) best = fine;
  }
  return {HillParams(best.point[0], best.point[1]), best.value};
}

bool is_strictly_decreasing(std::span<const BinnedPoint> points) {
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].proportion < points[i - 1].proportion)) return false;
  }
  return true;
}

std::size_t count_half_crossings(std::span<const BinnedPoint> points) {
  std::size_t crossings = 0;
  int prev = 0;
  for (const auto& p : points) {
    const int side = p.proportion > 0.5 ? 1 : (p.proportion < 0.5 ? -1 : 0);
    if (side == 0) continue;
    if (prev != 0 && side != prev) ++crossings;
    prev = side;
  }
  return crossings;
}

std::vector<std::filesystem::path> list_corpus_files(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorKind::io, "'" + dir.string() + "' is not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<RankFrequencyTable> rank_files(std::span<const std::filesystem::path> files,
                                           const TokenizationRules& rules, bool strip_boilerplate,
                                           unsigned threads) {
  std::vector<RankFrequencyTable> tables(files.size());
  std::vector<std::exception_ptr> failures(files.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        tables[i] = rank_file(files[i], rules, strip_boilerplate);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(files.size())));
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  // Report the first failure in file order so errors are deterministic.
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return tables;
}

}  // namespace stoprank
