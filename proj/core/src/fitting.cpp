#include "stoprank/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "stoprank/error.hpp"
#include "stoprank/sampling.hpp"

namespace stoprank {

std::string_view to_string(FitModel model) noexcept {
  switch (model) {
    case FitModel::zipf: return "zipf";
    case FitModel::quadratic: return "quadratic";
    case FitModel::brf: return "brf";
    case FitModel::mandelbrot: return "mandelbrot";
  }
  return "unknown";
}

FitModel parse_fit_model(std::string_view name) {
  for (auto m : all_fit_models()) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorKind::invalid_argument,
              "unknown model '" + std::string(name) + "' (expected zipf, quadratic, brf or mandelbrot)");
}

std::vector<FitModel> parse_fit_models(std::string_view names) {
  std::vector<FitModel> out;
  std::size_t pos = 0;
  while (pos <= names.size()) {
    auto comma = names.find(',', pos);
    if (comma == std::string_view::npos) comma = names.size();
    auto item = names.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      const auto m = parse_fit_model(item);
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    pos = comma + 1;
  }
  if (out.empty()) throw Error(ErrorKind::invalid_argument, "no models requested");
  return out;
}

const std::vector<FitModel>& all_fit_models() {
  static const std::vector<FitModel> models{FitModel::zipf, FitModel::quadratic, FitModel::brf,
                                            FitModel::mandelbrot};
  return models;
}

LinearFit linear_least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& response) {
  if (design.rows() != response.size()) {
    throw Error(ErrorKind::precondition, "design has " + std::to_string(design.rows()) + " rows but response has " +
                                             std::to_string(response.size()) + " entries");
  }
  if (design.cols() == 0 || design.rows() < design.cols()) {
    throw Error(ErrorKind::precondition, "least squares needs at least as many rows (" +
                                             std::to_string(design.rows()) + ") as columns (" +
                                             std::to_string(design.cols()) + ")");
  }
  if (!design.allFinite() || !response.allFinite()) {
    throw Error(ErrorKind::invalid_argument, "least squares input contains non-finite values");
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-12);
  if (qr.rank() < design.cols()) {
    throw Error(ErrorKind::degenerate, "design matrix is rank deficient (rank " + std::to_string(qr.rank()) +
                                           " < " + std::to_string(design.cols()) + ")");
  }
  LinearFit out;
  out.coefficients = qr.solve(response);
  out.residuals = response - design * out.coefficients;
  out.rss = out.residuals.squaredNorm();
  return out;
}

FitInput FitInput::from_table(const RankFrequencyTable& table, Sampling sampling, std::uint64_t head, double base) {
  if (table.empty()) throw Error(ErrorKind::precondition, "cannot fit an empty table");
  FitInput in;
  in.r_max = table.r_max();
  if (sampling == Sampling::all) {
    in.points.reserve(table.r_max());
    for (const auto& rec : table.records()) {
      in.points.push_back({static_cast<double>(rec.rank), static_cast<double>(rec.count)});
    }
  } else {
    for (auto r : log_even_ranks(table.r_max(), head, base)) {
      in.points.push_back({static_cast<double>(r), static_cast<double>(table.at_rank(r).count)});
    }
  }
  return in;
}

double adjusted_r_squared(double r2, std::size_t n, std::size_t p) {
  if (n <= p + 1) {
    throw Error(ErrorKind::precondition, "adjusted R^2 needs more than " + std::to_string(p + 1) + " points");
  }
  const double nn = static_cast<double>(n);
  const double pp = static_cast<double>(p);
  return 1.0 - (1.0 - r2) * (nn - 1.0) / (nn - pp - 1.0);
}

std::size_t parameter_count(FitModel model) noexcept {
  switch (model) {
    case FitModel::zipf: return 1;
    case FitModel::quadratic: return 2;
    case FitModel::brf: return 2;
    case FitModel::mandelbrot: return 3;
  }
  return 0;
}

std::size_t minimum_points(FitModel model) noexcept { return parameter_count(model) + 2; }

double FitResult::predict(double r) const {
  const double lr = std::log(r);
  double y = params.c_prime;
  switch (model) {
    case FitModel::zipf:
      y -= params.alpha * lr;
      break;
    case FitModel::quadratic:
      y -= params.alpha * lr + params.kappa.value_or(0.0) * lr * lr;
      break;
    case FitModel::brf:
      y += -params.alpha * lr + params.beta.value_or(0.0) * std::log(static_cast<double>(r_max) + 1.0 - r);
      break;
    case FitModel::mandelbrot:
      y -= params.alpha * std::log(r + params.B.value_or(0.0));
      break;
  }
  return std::exp(y);
}

std::vector<std::pair<std::string, double>> FitResult::named_params() const {
  std::vector<std::pair<std::string, double>> out{{"c_prime", params.c_prime}, {"alpha", params.alpha}};
  if (params.kappa) out.emplace_back("kappa", *params.kappa);
  if (params.beta) out.emplace_back("beta", *params.beta);
  if (params.B) out.emplace_back("B", *params.B);
  return out;
}

namespace {

void check_input(const FitInput& input, FitModel model) {
  const std::size_t need = minimum_points(model);
  if (input.points.size() < need) {
    throw Error(ErrorKind::precondition, std::string(to_string(model)) + " fit needs at least " +
                                             std::to_string(need) + " points, got " +
                                             std::to_string(input.points.size()));
  }
  std::set<double> seen;
  for (const auto& p : input.points) {
    if (!(p.rank >= 1.0) || !std::isfinite(p.rank)) {
      throw Error(ErrorKind::invalid_argument, "fit point has rank < 1");
    }
    if (!(p.count >= 1.0) || !std::isfinite(p.count)) {
      throw Error(ErrorKind::invalid_argument, "fit point at rank " + std::to_string(p.rank) + " has count < 1");
    }
    if (!seen.insert(p.rank).second) {
      throw Error(ErrorKind::invalid_argument, "duplicate rank " + std::to_string(p.rank) + " in fit input");
    }
  }
}

struct Prepared {
  Eigen::VectorXd y;
  Eigen::VectorXd log_r;
  double tss = 0.0;
};

Prepared prepare(const FitInput& input) {
  const auto n = static_cast<Eigen::Index>(input.points.size());
  Prepared p;
  p.y.resize(n);
  p.log_r.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    p.y[i] = std::log(input.points[i].count);
    p.log_r[i] = std::log(input.points[i].rank);
  }
  p.tss = (p.y.array() - p.y.mean()).square().sum();
  if (!(p.tss > 0.0)) {
    throw Error(ErrorKind::degenerate, "all counts are equal; R^2 is undefined");
  }
  return p;
}

FitResult finish(FitModel model, const FitInput& input, const Prepared& prep, FitParams params, double rss) {
  FitResult out;
  out.model = model;
  out.params = params;
  out.n_points = input.points.size();
  out.residual_sum_squares = rss;
  out.r2 = 1.0 - rss / prep.tss;
  out.adjusted_r2 = adjusted_r_squared(out.r2, out.n_points, parameter_count(model));
  out.r_max = input.r_max;
  return out;
}

LinearFit fit_offset(const Prepared& prep, const FitInput& input, double B) {
  const auto n = prep.y.size();
  Eigen::MatrixXd X(n, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = std::log(input.points[i].rank + B);
  }
  return linear_least_squares(X, prep.y);
}

}  // namespace

FitResult fit_zipf(const FitInput& input) {
  check_input(input, FitModel::zipf);
  const auto prep = prepare(input);
  Eigen::MatrixXd X(prep.y.size(), 2);
  X.col(0).setOnes();
  X.col(1) = prep.log_r;
  const auto lf = linear_least_squares(X, prep.y);
  FitParams params;
  params.c_prime = lf.coefficients[0];
  params.alpha = -lf.coefficients[1];
  return finish(FitModel::zipf, input, prep, params, lf.rss);
}

FitResult fit_quadratic(const FitInput& input) {
  check_input(input, FitModel::quadratic);
  const auto prep = prepare(input);
  Eigen::MatrixXd X(prep.y.size(), 3);
  X.col(0).setOnes();
  X.col(1) = prep.log_r;
  X.col(2) = prep.log_r.array().square();
  const auto lf = linear_least_squares(X, prep.y);
  FitParams params;
  params.c_prime = lf.coefficients[0];
  params.alpha = -lf.coefficients[1];
  params.kappa = -lf.coefficients[2];
  return finish(FitModel::quadratic, input, prep, params, lf.rss);
}

FitResult fit_brf(const FitInput& input) {
  check_input(input, FitModel::brf);
  for (const auto& p : input.points) {
    if (p.rank > static_cast<double>(input.r_max)) {
      throw Error(ErrorKind::invalid_argument, "BRF point at rank " + std::to_string(p.rank) +
                                                   " exceeds r_max " + std::to_string(input.r_max));
    }
  }
  const auto prep = prepare(input);
  const auto n = prep.y.size();
  Eigen::MatrixXd X(n, 3);
  X.col(0).setOnes();
  X.col(1) = prep.log_r;
  for (Eigen::Index i = 0; i < n; ++i) {
    X(i, 2) = std::log(static_cast<double>(input.r_max) + 1.0 - input.points[i].rank);
  }
  const auto lf = linear_least_squares(X, prep.y);
  FitParams params;
  params.c_prime = lf.coefficients[0];
  params.alpha = -lf.coefficients[1];
  params.beta = lf.coefficients[2];
  return finish(FitModel::brf, input, prep, params, lf.rss);
}

double mandelbrot_rss(const FitInput& input, double B) {
  check_input(input, FitModel::mandelbrot);
  return fit_offset(prepare(input), input, B).rss;
}

FitResult fit_mandelbrot(const FitInput& input, std::span<const double> b_grid) {
  if (b_grid.empty()) throw Error(ErrorKind::invalid_argument, "Mandelbrot B grid is empty");
  for (double B : b_grid) {
    if (!(B >= 0.0) || !std::isfinite(B)) {
      throw Error(ErrorKind::invalid_argument, "Mandelbrot B grid values must be finite and >= 0");
    }
  }
  check_input(input, FitModel::mandelbrot);
  const auto prep = prepare(input);

  double best_B = 0.0;
  LinearFit best;
  bool have = false;
  for (double B : b_grid) {
    LinearFit lf;
    try {
      lf = fit_offset(prep, input, B);
    } catch (const Error& e) {
      // A very large offset can flatten log(r + B) over a short rank range.
      if (e.kind() == ErrorKind::degenerate) continue;
      throw;
    }
    if (!have || lf.rss < best.rss || (lf.rss == best.rss && B < best_B)) {
      best = std::move(lf);
      best_B = B;
      have = true;
    }
  }
  if (!have) throw Error(ErrorKind::degenerate, "Mandelbrot design is degenerate for every B in the grid");
  FitParams params;
  params.c_prime = best.coefficients[0];
  params.alpha = -best.coefficients[1];
  params.B = best_B;
  return finish(FitModel::mandelbrot, input, prep, params, best.rss);
}

FitResult fit_mandelbrot(const FitInput& input) { return fit_mandelbrot(input, default_mandelbrot_grid()); }

const std::vector<double>& default_mandelbrot_grid() {
  static const std::vector<double> grid = [] {
    std::vector<double> g;
    for (int b = 0; b <= 100; ++b) g.push_back(b);
    for (int b = 110; b <= 500; b += 10) g.push_back(b);
    return g;
  }();
  return grid;
}

FitResult fit(const FitInput& input, FitModel model) {
  switch (model) {
    case FitModel::zipf: return fit_zipf(input);
    case FitModel::quadratic: return fit_quadratic(input);
    case FitModel::brf: return fit_brf(input);
    case FitModel::mandelbrot: return fit_mandelbrot(input);
  }
  throw Error(ErrorKind::invalid_argument, "unknown model");
}

std::vector<FitResult> compare_models(const FitInput& input, std::span<const FitModel> models) {
  std::vector<FitResult> out;
  out.reserve(models.size());
  for (auto m : models) out.push_back(fit(input, m));
  std::stable_sort(out.begin(), out.end(),
                   [](const FitResult& a, const FitResult& b) { return a.adjusted_r2 > b.adjusted_r2; });
  return out;
}

}  // namespace stoprank
