#pragma once

#include <cstdint>
#include <vector>

namespace stoprank {

/// Ranks 1..min(head, r_max) followed by round(head * base^k), k = 1, 2, ...,
/// while the rounded value stays <= r_max. Sorted, without duplicates.
/// Rounding is half away from zero.
/// Throws Error{invalid_argument} if r_max < 1, head < 1 or base <= 1.
std::vector<std::uint64_t> log_even_ranks(std::uint64_t r_max, std::uint64_t head = 10, double base = 1.05);

}  // namespace stoprank
