#pragma once

// Hill-function subset selection. A rank-r word of a full ranking joins the
// subset with probability
//
//   s(r) = 1 / (1 + (r / r_mid)^gamma)
//
// and its expected rank within the subset is the running sum of s up to r.

#include <cstdint>
#include <string_view>
#include <vector>

#include "stoprank/corpus.hpp"
#include "stoprank/rank_mapping.hpp"

namespace stoprank {

class HillParams {
 public:
  /// Throws Error{invalid_argument} unless both values are finite and > 0.
  HillParams(double r_mid, double gamma);

  double r_mid() const noexcept { return r_mid_; }
  double gamma() const noexcept { return gamma_; }

  friend bool operator==(const HillParams&, const HillParams&) = default;

 private:
  double r_mid_;
  double gamma_;
};

/// Decreasing Hill function; 0.5 at r == r_mid. Throws for r <= 0.
double prob_selected(double r, const HillParams& params);
/// 1 - prob_selected(r), so the two always sum to exactly 1.
double prob_not_selected(double r, const HillParams& params);

enum class CumulativeMethod { sum, integral };

/// sum:      prob_selected(1) + ... + prob_selected(r)
/// integral: integral of prob_selected over [1, r] (adaptive Simpson, rel. tol 1e-8)
/// Throws Error{invalid_argument} for r < 1.
double cumulative_new_rank(std::uint64_t r, const HillParams& params, CumulativeMethod method = CumulativeMethod::sum);
/// Same for prob_not_selected. In sum mode this is computed as
/// r - cumulative_new_rank(r), so the pair adds up to r.
double cumulative_nonstop_rank(std::uint64_t r, const HillParams& params,
                               CumulativeMethod method = CumulativeMethod::sum);

enum class SelectionMode { selected, complement };

std::string_view to_string(SelectionMode mode) noexcept;
SelectionMode parse_selection_mode(std::string_view name);

struct HillGrid {
  std::vector<double> r_mid;
  std::vector<double> gamma;
  /// After the coarse scan, rescan a 21x21 patch spanning one coarse step on
  /// each side of the best point (10x finer).
  bool refine = true;

  /// r_mid = 10, 11, ..., 400 and gamma = 0.50, 0.55, ..., 5.00.
  static HillGrid defaults();
};

struct HillFit {
  HillParams params;
  double objective = 0.0;
};

/// Sum of squared log errors between the modelled cumulative rank (sum form;
/// selected or complement) and the observed subset ranks.
double hill_objective(const RankMapping& mapping, const HillParams& params, SelectionMode mode);

/// Grid minimizer of hill_objective; ties go to the lexicographically first
/// (r_mid, gamma). Throws Error{precondition} on an empty mapping or grid.
HillFit fit_hill(const RankMapping& mapping, const HillGrid& grid = HillGrid::defaults(),
                 SelectionMode mode = SelectionMode::selected, unsigned threads = 1);

/// T(r) = max(1, round(top_count / r^alpha)) for r = 1..n.
class SyntheticZipfPopulation {
 public:
  /// Throws Error{invalid_argument} for n == 0, alpha < 0 or top_count < 1.
  SyntheticZipfPopulation(std::uint64_t n, double alpha, double top_count);

  std::uint64_t n() const noexcept { return n_; }
  double alpha() const noexcept { return alpha_; }
  double top_count() const noexcept { return top_; }
  std::uint64_t count(std::uint64_t r) const;

 private:
  std::uint64_t n_;
  double alpha_;
  double top_;
};

struct SimulatedSubset {
  RankFrequencyTable table;  // words are "r<original rank>"
  RankMapping mapping;
};

/// Walks r = 1..n accumulating S(r) = prob_selected(1) + ... + prob_selected(r).
/// Rank r is selected when floor(S(r)) > floor(S(r-1)); every other rank
/// forms the complement. The two modes therefore partition 1..n, and the
/// subset ranks are floor(S(r)) and r - floor(S(r)) respectively.
SimulatedSubset simulate_subset(const SyntheticZipfPopulation& population, const HillParams& params,
                                SelectionMode mode);

/// Tail exponent of the BRF that the selected subset approaches:
/// alpha / (gamma - 1). Throws Error{invalid_argument} unless gamma > 1 and alpha > 0.
double predicted_beta(double alpha, double gamma);

}  // namespace stoprank
