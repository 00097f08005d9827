#include "stoprank/sampling.hpp"

#include <cmath>
#include <string>

#include "stoprank/error.hpp"

namespace stoprank {

std::vector<std::uint64_t> log_even_ranks(std::uint64_t r_max, std::uint64_t head, double base) {
  if (r_max < 1) throw Error(ErrorKind::invalid_argument, "r_max must be >= 1");
  if (head < 1) throw Error(ErrorKind::invalid_argument, "head must be >= 1");
  if (!(base > 1.0) || !std::isfinite(base)) {
    throw Error(ErrorKind::invalid_argument, "sampling base must be > 1, got " + std::to_string(base));
  }

  std::vector<std::uint64_t> ranks;
  for (std::uint64_t r = 1; r <= std::min(head, r_max); ++r) ranks.push_back(r);

  const double h = static_cast<double>(head);
  for (int k = 1;; ++k) {
    const double v = std::round(h * std::pow(base, k));
    if (v > static_cast<double>(r_max)) break;
    const auto r = static_cast<std::uint64_t>(v);
    if (r > ranks.back()) ranks.push_back(r);
  }
  return ranks;
}

}  // namespace stoprank
