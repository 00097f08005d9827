#include "stoprank/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "stoprank/corpus.hpp"
#include "stoprank/error.hpp"
#include "stoprank/fitting.hpp"
#include "stoprank/grid_search.hpp"
#include "stoprank/io.hpp"
#include "stoprank/selection_model.hpp"
#include "stoprank/stoplists.hpp"
#include "stoprank/validation.hpp"

namespace fs = std::filesystem;

namespace stoprank {

namespace {

struct TokenizerFlags {
  bool no_lowercase = false;
  bool keep_punctuation = false;
  bool no_apostrophes = false;
  std::size_t min_length = 1;
  bool strip_boilerplate = false;

  TokenizationRules rules() const {
    TokenizationRules r;
    r.lowercase = !no_lowercase;
    r.strip_punctuation = !keep_punctuation;
    r.keep_internal_apostrophes = !no_apostrophes;
    r.min_token_length = min_length;
    return r;
  }
};

void add_tokenizer_flags(CLI::App* cmd, TokenizerFlags& f) {
  cmd->add_flag("--strip-boilerplate", f.strip_boilerplate, "Drop text outside Project Gutenberg START/END markers");
  cmd->add_flag("--no-lowercase", f.no_lowercase, "Keep letter case");
  cmd->add_flag("--keep-punctuation", f.keep_punctuation, "Split on whitespace only");
  cmd->add_flag("--no-apostrophes", f.no_apostrophes, "Split at internal apostrophes");
  cmd->add_option("--min-length", f.min_length, "Drop tokens shorter than this")->check(CLI::PositiveNumber);
}

Sampling parse_sampling(const std::string& s) {
  if (s == "log-even") return Sampling::log_even;
  if (s == "all") return Sampling::all;
  throw Error(ErrorKind::invalid_argument, "unknown sampling '" + s + "' (expected log-even or all)");
}

// "first:last:step", inclusive of last when it lies on the step.
std::vector<double> parse_range(const std::string& spec, std::string_view what) {
  double a = 0, b = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof()) {
    throw Error(ErrorKind::invalid_argument, std::string(what) + " range '" + spec + "' is not first:last:step");
  }
  if (!(step > 0.0) || b < a) {
    throw Error(ErrorKind::invalid_argument, std::string(what) + " range needs step > 0 and last >= first");
  }
  const auto n = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
  return linspace(a, a + step * static_cast<double>(n - 1), n);
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

fs::path with_suffix(const std::string& prefix, std::string_view suffix) { return fs::path(prefix + std::string(suffix)); }

void ensure_parent(const fs::path& p) {
  if (p.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
    if (ec) throw Error(ErrorKind::io, "cannot create directory '" + p.parent_path().string() + "'");
  }
}

void write_output(const fs::path& p, const std::string& content) {
  ensure_parent(p);
  write_file_atomic(p, content);
}

RankFrequencyTable load_table(const std::string& path) {
  try {
    return table_from_csv(read_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), "'" + path + "': " + e.what());
  }
}

// --- rank -------------------------------------------------------------------

struct RankArgs {
  std::vector<std::string> inputs;
  std::string out;
  bool json = false;
  unsigned threads = default_threads();
  TokenizerFlags tok;
};

int cmd_rank(const RankArgs& a, std::ostream& out, std::ostream& err) {
  const std::string ext = a.json ? ".json" : ".csv";
  std::vector<fs::path> targets;
  if (a.inputs.size() == 1 && !a.out.empty() && !fs::is_directory(a.out)) {
    targets.emplace_back(a.out);
  } else {
    const fs::path dir = a.out.empty() ? fs::path(".") : fs::path(a.out);
    for (const auto& in : a.inputs) targets.push_back(dir / (fs::path(in).stem().string() + ext));
  }
  std::vector<fs::path> files(a.inputs.begin(), a.inputs.end());

  // Every file is attempted; failures are reported per path afterwards.
  std::vector<std::string> errors(files.size());
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        const auto table = rank_file(files[i], a.tok.rules(), a.tok.strip_boilerplate);
        write_output(targets[i], a.json ? table_to_json(table) : table_to_csv(table));
      } catch (const Error& e) {
        errors[i] = std::string(to_string(e.kind())) + ": " + e.what();
      } catch (const std::exception& e) {
        errors[i] = std::string("io: ") + e.what();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(a.threads, static_cast<unsigned>(files.size())));
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  int status = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (errors[i].empty()) {
      out << targets[i].string() << '\n';
    } else {
      err << "error: " << errors[i] << '\n';
      status = 1;
    }
  }
  return status;
}

// --- fit --------------------------------------------------------------------

struct FitArgs {
  std::string table;
  std::string models = "zipf,quadratic,brf,mandelbrot";
  std::string sample = "log-even";
  std::uint64_t head = 10;
  double base = 1.05;
  std::string b_grid;
  std::string out;
  std::string curves;
};

int cmd_fit(const FitArgs& a, std::ostream& out) {
  const auto table = load_table(a.table);
  const auto models = parse_fit_models(a.models);
  const auto input = FitInput::from_table(table, parse_sampling(a.sample), a.head, a.base);

  std::vector<FitResult> results;
  for (auto m : models) {
    if (m == FitModel::mandelbrot && !a.b_grid.empty()) {
      results.push_back(fit_mandelbrot(input, parse_range(a.b_grid, "B grid")));
    } else {
      results.push_back(fit(input, m));
    }
  }
  std::stable_sort(results.begin(), results.end(),
                   [](const FitResult& x, const FitResult& y) { return x.adjusted_r2 > y.adjusted_r2; });

  const auto report = fit_results_to_json(results);
  if (a.out.empty()) {
    out << report;
  } else {
    write_output(a.out, report);
  }
  std::string curves = a.curves;
  if (curves.empty() && !a.out.empty()) {
    fs::path p(a.out);
    curves = (p.parent_path() / (p.stem().string() + ".curves.csv")).string();
  }
  if (!curves.empty()) write_output(curves, fitted_curves_to_csv(input, results));
  return 0;
}

// --- partition --------------------------------------------------------------

struct PartitionArgs {
  std::string table;
  std::string stoplist;
  std::string out_prefix;
};

int cmd_partition(const PartitionArgs& a, std::ostream& out) {
  const auto table = load_table(a.table);
  const auto list = resolve_list(a.stoplist);
  const auto parts = partition(table, list);
  const std::vector<std::pair<fs::path, std::string>> files{
      {with_suffix(a.out_prefix, ".stopwords.csv"), table_to_csv(parts.stopwords)},
      {with_suffix(a.out_prefix, ".stopwords.mapping.csv"), mapping_to_csv(parts.stopword_mapping)},
      {with_suffix(a.out_prefix, ".others.csv"), table_to_csv(parts.others)},
      {with_suffix(a.out_prefix, ".others.mapping.csv"), mapping_to_csv(parts.other_mapping)},
  };
  for (const auto& [path, content] : files) {
    write_output(path, content);
    out << path.string() << '\n';
  }
  return 0;
}

// --- hill-fit ---------------------------------------------------------------

struct HillArgs {
  std::string mapping;
  std::string mode = "selected";
  std::string out;
  double alpha = 1.0;
  std::string rmid_range;
  std::string gamma_range;
  bool no_refine = false;
  unsigned threads = default_threads();
};

HillGrid make_grid(const std::string& rmid, const std::string& gamma, bool no_refine) {
  auto grid = HillGrid::defaults();
  if (!rmid.empty()) grid.r_mid = parse_range(rmid, "r_mid");
  if (!gamma.empty()) grid.gamma = parse_range(gamma, "gamma");
  grid.refine = !no_refine;
  return grid;
}

int cmd_hill(const HillArgs& a, std::ostream& out) {
  RankMapping mapping;
  try {
    mapping = mapping_from_csv(read_file(a.mapping));
  } catch (const Error& e) {
    throw Error(e.kind(), "'" + a.mapping + "': " + e.what());
  }
  if (mapping.empty()) throw Error(ErrorKind::precondition, "'" + a.mapping + "' has no (r, r_new) pairs");
  const auto mode = parse_selection_mode(a.mode);
  const auto fit = fit_hill(mapping, make_grid(a.rmid_range, a.gamma_range, a.no_refine), mode, a.threads);
  const auto report = hill_report_to_json({fit, mode, mapping.size(), a.alpha});
  if (a.out.empty()) {
    out << report;
  } else {
    write_output(a.out, report);
  }
  return 0;
}

// --- simulate ---------------------------------------------------------------

struct SimulateArgs {
  std::uint64_t n = 15000;
  double alpha = 1.07;
  double top = 20000;
  double rmid = 86;
  double gamma = 2.3;
  std::string mode = "selected";
  std::string sample = "log-even";
  std::string out_prefix;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const SyntheticZipfPopulation population(a.n, a.alpha, a.top);
  const HillParams params(a.rmid, a.gamma);
  const auto mode = parse_selection_mode(a.mode);
  const auto sim = simulate_subset(population, params, mode);

  std::vector<FitResult> results;
  std::string fit_error;
  try {
    const auto input = FitInput::from_table(sim.table, parse_sampling(a.sample));
    if (mode == SelectionMode::selected) {
      results.push_back(fit_brf(input));
    } else {
      const std::vector<FitModel> models{FitModel::quadratic, FitModel::mandelbrot, FitModel::brf};
      results = compare_models(input, models);
    }
  } catch (const Error& e) {
    // A tiny subset (e.g. a sharp cutoff) is still a valid simulation; the
    // report just says why there is no fit.
    if (e.kind() != ErrorKind::precondition && e.kind() != ErrorKind::degenerate) throw;
    fit_error = std::string(to_string(e.kind())) + ": " + e.what();
  }

  const std::vector<std::pair<fs::path, std::string>> files{
      {with_suffix(a.out_prefix, ".table.csv"), table_to_csv(sim.table)},
      {with_suffix(a.out_prefix, ".mapping.csv"), mapping_to_csv(sim.mapping)},
      {with_suffix(a.out_prefix, ".fit.json"),
       fit_error.empty() ? fit_results_to_json(results) : "{\n  \"error\": \"" + fit_error + "\"\n}\n"},
  };
  for (const auto& [path, content] : files) {
    write_output(path, content);
    out << path.string() << '\n';
  }
  return 0;
}

// --- validate ---------------------------------------------------------------

struct ValidateArgs {
  std::string corpus_dir;
  std::string stoplist = "snowball175";
  std::uint64_t max_rank = 5000;
  std::string fit_points = "binned";
  std::string out_prefix;
  unsigned threads = default_threads();
  TokenizerFlags tok;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
  const auto files = list_corpus_files(a.corpus_dir);
  if (files.empty()) throw Error(ErrorKind::precondition, "no .txt files in '" + a.corpus_dir + "'");
  if (files.size() < 2) {
    throw Error(ErrorKind::precondition, "need at least 2 corpora in '" + a.corpus_dir + "', found 1");
  }
  const auto list = resolve_list(a.stoplist);
  const auto tables = rank_files(files, a.tok.rules(), a.tok.strip_boilerplate, a.threads);
  const auto curve = stopword_proportion(tables, list, a.max_rank);
  const auto bins = geometric_mean_bins(curve);

  std::vector<BinnedPoint> points;
  if (a.fit_points == "binned") {
    points = bins;
  } else if (a.fit_points == "raw") {
    points = raw_points(curve);
  } else {
    throw Error(ErrorKind::invalid_argument, "unknown --fit-points '" + a.fit_points + "' (expected binned or raw)");
  }
  const auto fit = fit_proportion_hill(points);

  ValidationReport report{fit,
                          a.fit_points,
                          points.size(),
                          tables.size(),
                          list.name(),
                          a.max_rank,
                          is_strictly_decreasing(bins),
                          count_half_crossings(bins)};

  const std::vector<std::pair<fs::path, std::string>> outputs{
      {with_suffix(a.out_prefix, ".proportions.csv"), proportions_to_csv(curve)},
      {with_suffix(a.out_prefix, ".binned.csv"), bins_to_csv(bins)},
      {with_suffix(a.out_prefix, ".hill.json"), validation_report_to_json(report)},
  };
  for (const auto& [path, content] : outputs) {
    write_output(path, content);
    out << path.string() << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-frequency analysis of stopwords and non-stopwords", "stoprank"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read option defaults from a key=value file ([section] per subcommand)");
  app.set_version_flag("--version", "stoprank 0.1.0");

  RankArgs rank_args;
  auto* rank = app.add_subcommand("rank", "Tokenize text files and write rank-frequency tables");
  rank->add_option("--input", rank_args.inputs, "Text files")->required();
  rank->add_option("--out", rank_args.out, "Output file (one input) or directory");
  rank->add_flag("--json", rank_args.json, "Write JSON records instead of CSV");
  rank->add_option("--threads", rank_args.threads, "Files processed concurrently")->check(CLI::PositiveNumber);
  add_tokenizer_flags(rank, rank_args.tok);

  FitArgs fit_args;
  auto* fitc = app.add_subcommand("fit", "Fit rank-frequency models to a table");
  fitc->add_option("--table", fit_args.table, "rank,word,count CSV")->required();
  fitc->add_option("--models", fit_args.models, "Comma-separated subset of zipf,quadratic,brf,mandelbrot")->capture_default_str();
  fitc->add_option("--sample", fit_args.sample, "log-even or all")->capture_default_str();
  fitc->add_option("--sample-head", fit_args.head, "Ranks always sampled")->capture_default_str()->check(CLI::PositiveNumber);
  fitc->add_option("--sample-base", fit_args.base, "Geometric step of log-even sampling")->capture_default_str();
  fitc->add_option("--b-grid", fit_args.b_grid, "Mandelbrot B grid as first:last:step");
  fitc->add_option("--out", fit_args.out, "JSON report (default: stdout)");
  fitc->add_option("--curves", fit_args.curves, "Fitted-curve CSV (default: <out>.curves.csv)");

  PartitionArgs part_args;
  auto* part = app.add_subcommand("partition", "Split a table into stopwords and the rest");
  part->add_option("--table", part_args.table, "rank,word,count CSV")->required();
  part->add_option("--stoplist", part_args.stoplist, "common123, spacy305, snowball175 or a list file")->required();
  part->add_option("--out-prefix", part_args.out_prefix, "Prefix for the four output files")->required();

  HillArgs hill_args;
  auto* hill = app.add_subcommand("hill-fit", "Fit (r_mid, gamma) to an r,r_new rank mapping");
  hill->add_option("--mapping", hill_args.mapping, "r,r_new CSV")->required();
  hill->add_option("--mode", hill_args.mode, "selected or complement")->capture_default_str();
  hill->add_option("--out", hill_args.out, "JSON report (default: stdout)");
  hill->add_option("--alpha", hill_args.alpha, "Zipf exponent used for predicted_beta")->capture_default_str();
  hill->add_option("--rmid-range", hill_args.rmid_range, "r_mid grid as first:last:step");
  hill->add_option("--gamma-range", hill_args.gamma_range, "gamma grid as first:last:step");
  hill->add_flag("--no-refine", hill_args.no_refine, "Skip the 10x local refinement pass");
  hill->add_option("--threads", hill_args.threads, "Grid evaluation threads")->check(CLI::PositiveNumber);

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "Select a subset of a synthetic Zipf population");
  sim->add_option("--n", sim_args.n, "Word types in the population")->capture_default_str()->check(CLI::PositiveNumber);
  sim->add_option("--alpha", sim_args.alpha, "Population Zipf exponent")->capture_default_str();
  sim->add_option("--top", sim_args.top, "Tokens of the rank-1 word")->capture_default_str();
  sim->add_option("--rmid", sim_args.rmid, "Hill midpoint rank")->capture_default_str();
  sim->add_option("--gamma", sim_args.gamma, "Hill coefficient")->capture_default_str();
  sim->add_option("--mode", sim_args.mode, "selected or complement")->capture_default_str();
  sim->add_option("--sample", sim_args.sample, "Sampling for the fit report: log-even or all")->capture_default_str();
  sim->add_option("--out-prefix", sim_args.out_prefix, "Prefix for table, mapping and fit report")->required();

  ValidateArgs val_args;
  auto* val = app.add_subcommand("validate", "Estimate stopword probability by rank across many corpora");
  val->add_option("--corpus-dir", val_args.corpus_dir, "Directory of .txt files")->required();
  val->add_option("--stoplist", val_args.stoplist, "Bundled name or list file")->capture_default_str();
  val->add_option("--max-rank", val_args.max_rank, "Largest rank considered")->capture_default_str()->check(CLI::PositiveNumber);
  val->add_option("--fit-points", val_args.fit_points, "binned or raw")->capture_default_str();
  val->add_option("--out-prefix", val_args.out_prefix, "Prefix for curve, bins and fit report")->required();
  val->add_option("--threads", val_args.threads, "Files ranked concurrently")->check(CLI::PositiveNumber);
  add_tokenizer_flags(val, val_args.tok);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: usage: " << msg << '\n';
    return 2;
  }

  try {
    if (rank->parsed()) return cmd_rank(rank_args, out, err);
    if (fitc->parsed()) return cmd_fit(fit_args, out);
    if (part->parsed()) return cmd_partition(part_args, out);
    if (hill->parsed()) return cmd_hill(hill_args, out);
    if (sim->parsed()) return cmd_simulate(sim_args, out);
    if (val->parsed()) return cmd_validate(val_args, out);
  } catch (const Error& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << to_string(e.kind()) << ": " << msg << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: io: " << msg << '\n';
    return 1;
  }
  return 1;
}

}  // namespace stoprank
