#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace stoprank {

/// Cartesian product of per-parameter value lists. Points are enumerated
/// lexicographically, first axis outermost.
class ParameterLattice {
 public:
  ParameterLattice() = default;
  /// Throws Error{invalid_argument} if any axis is empty.
  explicit ParameterLattice(std::vector<std::vector<double>> axes);

  const std::vector<std::vector<double>>& axes() const noexcept { return axes_; }
  std::size_t dimensions() const noexcept { return axes_.size(); }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  /// Point with linear index `i` (0 <= i < size()).
  std::vector<double> point(std::size_t i) const;

 private:
  std::vector<std::vector<double>> axes_;
};

/// Evenly spaced axis from `first` to `last` (inclusive) with `count` points.
/// Values are computed as first + i*(last-first)/(count-1) so that decimal
/// grids like 0.50, 0.55, ... do not accumulate drift.
std::vector<double> linspace(double first, double last, std::size_t count);

struct GridSearchResult {
  std::vector<double> point;
  double value = 0.0;
  std::size_t index = 0;
};

using Objective = std::function<double(std::span<const double>)>;

struct GridSearchOptions {
  /// 0 or 1 runs on the calling thread. The reduction is deterministic for
  /// any thread count.
  unsigned threads = 1;
};

/// Minimizes `objective` over every lattice point. NaN compares worse than any
/// number; among equal values the first point in lattice order wins.
/// Throws Error{precondition} on an empty lattice.
GridSearchResult grid_search(const Objective& objective, const ParameterLattice& lattice,
                             const GridSearchOptions& options = {});

}  // namespace stoprank
