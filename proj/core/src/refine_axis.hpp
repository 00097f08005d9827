#pragma once

#include <algorithm>
#include <vector>

namespace stoprank::detail {

// One coarse step on either side of `best` (the smaller neighbouring gap),
// at 10x resolution. `best` itself is kept exactly.
inline std::vector<double> refine_axis(const std::vector<double>& axis, double best) {
  std::vector<double> sorted = axis;
  std::sort(sorted.begin(), sorted.end());
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), best);
  double step = 0.0;
  if (it != sorted.begin()) step = best - *(it - 1);
  if (it != sorted.end() && it + 1 != sorted.end()) {
    const double up = *(it + 1) - best;
    step = step > 0.0 ? std::min(step, up) : up;
  }
  if (!(step > 0.0)) return {best};

  std::vector<double> out;
  for (int i = -10; i <= 10; ++i) {
    const double v = i == 0 ? best : best + step * i / 10.0;
    if (v > 0.0) out.push_back(v);
  }
  return out;
}

}  // namespace stoprank::detail
