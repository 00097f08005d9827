#include "stoprank/selection_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stoprank/error.hpp"
#include "stoprank/grid_search.hpp"
#include "stoprank/quadrature.hpp"
#include "refine_axis.hpp"

namespace stoprank {

HillParams::HillParams(double r_mid, double gamma) : r_mid_(r_mid), gamma_(gamma) {
  if (!(r_mid > 0.0) || !std::isfinite(r_mid)) {
    throw Error(ErrorKind::invalid_argument, "r_mid must be finite and > 0, got " + std::to_string(r_mid));
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorKind::invalid_argument, "gamma must be finite and > 0, got " + std::to_string(gamma));
  }
}

double prob_selected(double r, const HillParams& params) {
  if (!(r > 0.0)) throw Error(ErrorKind::invalid_argument, "rank must be > 0, got " + std::to_string(r));
  return 1.0 / (1.0 + std::pow(r / params.r_mid(), params.gamma()));
}

double prob_not_selected(double r, const HillParams& params) { return 1.0 - prob_selected(r, params); }

namespace {

void check_rank(std::uint64_t r) {
  if (r < 1) throw Error(ErrorKind::invalid_argument, "rank must be >= 1");
}

double selected_sum(std::uint64_t r, const HillParams& params) {
  double s = 0.0;
  for (std::uint64_t u = 1; u <= r; ++u) s += prob_selected(static_cast<double>(u), params);
  return s;
}

}  // namespace

double cumulative_new_rank(std::uint64_t r, const HillParams& params, CumulativeMethod method) {
  check_rank(r);
  if (method == CumulativeMethod::sum) return selected_sum(r, params);
  return adaptive_simpson([&](double u) { return prob_selected(u, params); }, 1.0, static_cast<double>(r));
}

double cumulative_nonstop_rank(std::uint64_t r, const HillParams& params, CumulativeMethod method) {
  check_rank(r);
  if (method == CumulativeMethod::sum) return static_cast<double>(r) - selected_sum(r, params);
  return adaptive_simpson([&](double u) { return prob_not_selected(u, params); }, 1.0, static_cast<double>(r));
}

std::string_view to_string(SelectionMode mode) noexcept {
  return mode == SelectionMode::selected ? "selected" : "complement";
}

SelectionMode parse_selection_mode(std::string_view name) {
  if (name == "selected") return SelectionMode::selected;
  if (name == "complement") return SelectionMode::complement;
  throw Error(ErrorKind::invalid_argument,
              "unknown mode '" + std::string(name) + "' (expected selected or complement)");
}

HillGrid HillGrid::defaults() {
  HillGrid g;
  for (int r = 10; r <= 400; ++r) g.r_mid.push_back(r);
  // Hundredths as integer ratios so that e.g. 2.7 is the nearest double to 2.7.
  for (int k = 50; k <= 500; k += 5) g.gamma.push_back(k / 100.0);
  return g;
}

namespace {

// Evaluates hill_objective quickly for many (r_mid, gamma) pairs by caching
// u^gamma for each gamma on the axis.
class HillEvaluator {
 public:
  HillEvaluator(const RankMapping& mapping, SelectionMode mode) : mapping_(mapping), mode_(mode) {
    max_rank_ = mapping.max_rank();
    log_observed_.reserve(mapping.size());
    for (const auto& p : mapping.pairs()) log_observed_.push_back(std::log(p.new_rank));
  }

  void cache(const std::vector<double>& gammas) {
    cached_gamma_ = gammas;
    std::sort(cached_gamma_.begin(), cached_gamma_.end());
    cached_gamma_.erase(std::unique(cached_gamma_.begin(), cached_gamma_.end()), cached_gamma_.end());
    powers_.assign(cached_gamma_.size(), {});
    for (std::size_t g = 0; g < cached_gamma_.size(); ++g) powers_[g] = powers(cached_gamma_[g]);
  }

  double operator()(double r_mid, double gamma) const {
    const auto it = std::lower_bound(cached_gamma_.begin(), cached_gamma_.end(), gamma);
    if (it != cached_gamma_.end() && *it == gamma) {
      return evaluate(powers_[static_cast<std::size_t>(it - cached_gamma_.begin())], r_mid, gamma);
    }
    return evaluate(powers(gamma), r_mid, gamma);
  }

 private:
  std::vector<double> powers(double gamma) const {
    std::vector<double> pw(max_rank_ + 1);
    for (std::uint64_t u = 1; u <= max_rank_; ++u) pw[u] = std::pow(static_cast<double>(u), gamma);
    return pw;
  }

  double evaluate(const std::vector<double>& pw, double r_mid, double gamma) const {
    // (u / r_mid)^gamma == u^gamma * r_mid^-gamma
    const double k = std::pow(r_mid, -gamma);
    const auto pairs = mapping_.pairs();
    double acc = 0.0;
    double total = 0.0;
    std::size_t j = 0;
    for (std::uint64_t u = 1; u <= max_rank_ && j < pairs.size(); ++u) {
      acc += 1.0 / (1.0 + pw[u] * k);
      if (pairs[j].rank != u) continue;
      const double predicted = mode_ == SelectionMode::selected ? acc : static_cast<double>(u) - acc;
      const double e = std::log(predicted) - log_observed_[j];
      total += e * e;
      ++j;
    }
    return total;
  }

  const RankMapping& mapping_;
  SelectionMode mode_;
  std::uint64_t max_rank_ = 0;
  std::vector<double> log_observed_;
  std::vector<double> cached_gamma_;
  std::vector<std::vector<double>> powers_;
};

}  // namespace

double hill_objective(const RankMapping& mapping, const HillParams& params, SelectionMode mode) {
  if (mapping.empty()) throw Error(ErrorKind::precondition, "rank mapping is empty");
  HillEvaluator eval(mapping, mode);
  return eval(params.r_mid(), params.gamma());
}

HillFit fit_hill(const RankMapping& mapping, const HillGrid& grid, SelectionMode mode, unsigned threads) {
  if (mapping.empty()) throw Error(ErrorKind::precondition, "cannot fit a Hill curve to an empty rank mapping");
  if (grid.r_mid.empty() || grid.gamma.empty()) throw Error(ErrorKind::precondition, "Hill grid is empty");
  for (double v : grid.r_mid) (void)HillParams(v, 1.0);
  for (double v : grid.gamma) (void)HillParams(1.0, v);

  HillEvaluator eval(mapping, mode);
  eval.cache(grid.gamma);
  const Objective objective = [&](std::span<const double> p) { return eval(p[0], p[1]); };
  const GridSearchOptions opts{threads};

  auto best = grid_search(objective, ParameterLattice({grid.r_mid, grid.gamma}), opts);
  if (grid.refine) {
    const auto fine_gamma = detail::refine_axis(grid.gamma, best.point[1]);
    eval.cache(fine_gamma);
    auto fine = grid_search(objective, ParameterLattice({detail::refine_axis(grid.r_mid, best.point[0]), fine_gamma}), opts);
    if (fine.value < best.value) best = fine;
  }
  if (!std::isfinite(best.value)) {
    throw Error(ErrorKind::degenerate, "Hill objective is not finite anywhere on the grid");
  }
  return {HillParams(best.point[0], best.point[1]), best.value};
}

SyntheticZipfPopulation::SyntheticZipfPopulation(std::uint64_t n, double alpha, double top_count)
    : n_(n), alpha_(alpha), top_(top_count) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "population size must be >= 1");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw Error(ErrorKind::invalid_argument, "alpha must be finite and >= 0");
  if (!(top_count >= 1.0) || !std::isfinite(top_count)) {
    throw Error(ErrorKind::invalid_argument, "top count must be finite and >= 1");
  }
}

std::uint64_t SyntheticZipfPopulation::count(std::uint64_t r) const {
  if (r < 1 || r > n_) throw Error(ErrorKind::invalid_argument, "rank " + std::to_string(r) + " outside population");
  const double t = std::round(top_ / std::pow(static_cast<double>(r), alpha_));
  return t < 1.0 ? 1 : static_cast<std::uint64_t>(t);
}

SimulatedSubset simulate_subset(const SyntheticZipfPopulation& population, const HillParams& params,
                                SelectionMode mode) {
  std::vector<RankRecord> records;
  std::vector<RankPair> pairs;
  double cumulative = 0.0;
  double floor_prev = 0.0;
  std::uint64_t size = 0;
  for (std::uint64_t r = 1; r <= population.n(); ++r) {
    cumulative += prob_selected(static_cast<double>(r), params);
    const double fl = std::floor(cumulative);
    const bool selected = fl > floor_prev;
    floor_prev = fl;
    if (selected != (mode == SelectionMode::selected)) continue;
    ++size;
    records.push_back({size, "r" + std::to_string(r), population.count(r)});
    pairs.push_back({r, static_cast<double>(size)});
  }
  return {RankFrequencyTable(std::move(records)), RankMapping(std::move(pairs))};
}

double predicted_beta(double alpha, double gamma) {
  if (!(gamma > 1.0)) {
    throw Error(ErrorKind::invalid_argument,
                "predicted beta needs gamma > 1 (got " + std::to_string(gamma) + ")");
  }
  if (!(alpha > 0.0)) throw Error(ErrorKind::invalid_argument, "alpha must be > 0");
  return alpha / (gamma - 1.0);
}

}  // namespace stoprank
