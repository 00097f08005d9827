#pragma once

// CSV/JSON serialization. CSV numbers use 6 significant digits (integers
// are written exactly); JSON keeps full double precision.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "stoprank/corpus.hpp"
#include "stoprank/fitting.hpp"
#include "stoprank/rank_mapping.hpp"
#include "stoprank/selection_model.hpp"
#include "stoprank/validation.hpp"

namespace stoprank {

/// %.6g, or the exact integer when the value is integral and below 2^53.
std::string format_csv_number(double v);
/// RFC 4180 quoting when the field contains a comma, quote or line break.
std::string csv_field(std::string_view s);

std::string table_to_csv(const RankFrequencyTable& table);
/// Expects the header `rank,word,count`. Throws Error{parse} with a line
/// number, or Error{invalid_argument} if the rows violate table invariants.
RankFrequencyTable table_from_csv(std::string_view text);
std::string table_to_json(const RankFrequencyTable& table);

std::string mapping_to_csv(const RankMapping& mapping);
/// Header `r,r_new`.
RankMapping mapping_from_csv(std::string_view text);

std::string proportions_to_csv(const ProportionCurve& curve);
std::string bins_to_csv(std::span<const BinnedPoint> bins);

std::string fit_results_to_json(std::span<const FitResult> results);
/// Rows `model,rank,observed,fitted` for every input point and result.
std::string fitted_curves_to_csv(const FitInput& input, std::span<const FitResult> results);

struct HillReport {
  HillFit fit;
  SelectionMode mode = SelectionMode::selected;
  std::size_t n_pairs = 0;
  /// Zipf exponent of the full ranking, used for predicted_beta.
  double alpha = 1.0;
};
/// predicted_beta is included only when gamma > 1.
std::string hill_report_to_json(const HillReport& report);

struct ValidationReport {
  HillFit fit;
  std::string fit_points;  // "binned" or "raw"
  std::size_t n_points = 0;
  std::size_t n_corpora = 0;
  std::string stoplist;
  std::uint64_t max_rank = 0;
  bool binned_strictly_decreasing = false;
  std::size_t binned_half_crossings = 0;
};
std::string validation_report_to_json(const ValidationReport& report);

std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace stoprank
