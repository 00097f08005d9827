#pragma once

// Rank-frequency models, all fitted by least squares on log T:
//
//   zipf        log T = c' - alpha log r
//   quadratic   log T = c' - alpha log r - kappa (log r)^2
//   brf         log T = c' - alpha log r + beta log(r_max + 1 - r)
//   mandelbrot  log T = c' - alpha log(r + B),  B picked from a grid
//
// Natural logarithms throughout.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "stoprank/corpus.hpp"

namespace stoprank {

enum class FitModel { zipf, quadratic, brf, mandelbrot };

std::string_view to_string(FitModel model) noexcept;
/// Throws Error{invalid_argument} for unknown names.
FitModel parse_fit_model(std::string_view name);
/// Comma-separated list, e.g. "zipf,brf". Duplicates are dropped.
std::vector<FitModel> parse_fit_models(std::string_view names);
const std::vector<FitModel>& all_fit_models();

struct LinearFit {
  Eigen::VectorXd coefficients;
  Eigen::VectorXd residuals;
  double rss = 0.0;
};

/// Ordinary least squares via column-pivoted QR.
/// Throws Error{precondition} if rows < cols or sizes disagree,
/// Error{degenerate} if the design is rank deficient.
LinearFit linear_least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& response);

struct FitPoint {
  double rank = 0.0;
  double count = 0.0;
};

enum class Sampling { log_even, all };

struct FitInput {
  std::vector<FitPoint> points;
  std::uint64_t r_max = 0;

  /// Points at log-even ranks (default) or every rank of `table`;
  /// r_max is the table's.
  static FitInput from_table(const RankFrequencyTable& table, Sampling sampling = Sampling::log_even,
                             std::uint64_t head = 10, double base = 1.05);
};

struct FitParams {
  double c_prime = 0.0;
  double alpha = 0.0;
  std::optional<double> kappa;  // quadratic
  std::optional<double> beta;   // brf
  std::optional<double> B;      // mandelbrot
};

struct FitResult {
  FitModel model = FitModel::zipf;
  FitParams params;
  double adjusted_r2 = 0.0;
  double r2 = 0.0;
  std::size_t n_points = 0;
  double residual_sum_squares = 0.0;
  std::uint64_t r_max = 0;

  /// Model value T(r) (not its log).
  double predict(double r) const;
  /// (symbol, value) pairs in a fixed order, only those the model defines.
  std::vector<std::pair<std::string, double>> named_params() const;
};

/// 1 - (1 - r2) (n - 1) / (n - p - 1). Requires n > p + 1.
double adjusted_r_squared(double r2, std::size_t n, std::size_t p);

/// Number of free parameters charged by adjusted R²: non-intercept linear
/// coefficients, plus the grid-searched offset for Mandelbrot.
std::size_t parameter_count(FitModel model) noexcept;

/// Smallest point count each fit accepts (p + 2, so adjusted R² is defined).
std::size_t minimum_points(FitModel model) noexcept;

FitResult fit_zipf(const FitInput& input);
FitResult fit_quadratic(const FitInput& input);
/// Throws Error{invalid_argument} if any rank exceeds input.r_max.
FitResult fit_brf(const FitInput& input);
/// Ties in RSS go to the smallest B. Throws Error{invalid_argument} on an
/// empty grid or a negative B.
FitResult fit_mandelbrot(const FitInput& input, std::span<const double> b_grid);
FitResult fit_mandelbrot(const FitInput& input);

/// {0, 1, ..., 100} followed by {110, 120, ..., 500}.
const std::vector<double>& default_mandelbrot_grid();

/// Residual sum of squares of the Mandelbrot fit at a fixed B.
double mandelbrot_rss(const FitInput& input, double B);

FitResult fit(const FitInput& input, FitModel model);

/// Runs each model on the same points; results sorted by adjusted R²,
/// best first (stable, so ties keep the order of `models`).
std::vector<FitResult> compare_models(const FitInput& input, std::span<const FitModel> models);

}  // namespace stoprank
