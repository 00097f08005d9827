#include "stoprank/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "stoprank/error.hpp"

namespace stoprank {

using nlohmann::json;

std::string format_csv_number(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9007199254740992.0) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

struct CsvRow {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

// Minimal RFC 4180 reader: quoted fields may hold commas, doubled quotes and
// line breaks. Blank lines are skipped.
std::vector<CsvRow> parse_csv(std::string_view text) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  std::size_t line = 1;
  row.line = 1;
  bool quoted = false;
  bool field_started = false;

  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    if (!(row.fields.size() == 1 && row.fields[0].empty())) rows.push_back(std::move(row));
    row = CsvRow{};
    row.line = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      ++line;
      end_row();
    } else if (c == '\r') {
      // tolerate CRLF
    } else {
      field += c;
      field_started = true;
    }
  }
  if (quoted) throw Error(ErrorKind::parse, "unterminated quoted field at line " + std::to_string(row.line));
  if (field_started || !row.fields.empty()) end_row();
  return rows;
}

void expect_header(const std::vector<CsvRow>& rows, std::initializer_list<std::string_view> names) {
  std::string want;
  for (auto n : names) want += (want.empty() ? "" : ",") + std::string(n);
  if (rows.empty()) throw Error(ErrorKind::parse, "empty CSV (expected header '" + want + "')");
  const auto& h = rows.front().fields;
  bool ok = h.size() == names.size();
  std::size_t i = 0;
  for (auto n : names) {
    if (!ok) break;
    ok = h[i++] == n;
  }
  if (!ok) throw Error(ErrorKind::parse, "bad CSV header (expected '" + want + "')");
}

std::uint64_t parse_uint(const std::string& s, std::size_t line, std::string_view what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + std::string(what) +
                                      " '" + s + "' is not a non-negative integer");
  }
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + std::string(what) + " out of range");
  }
}

double parse_real(const std::string& s, std::size_t line, std::string_view what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) {
    throw Error(ErrorKind::parse,
                "line " + std::to_string(line) + ": " + std::string(what) + " '" + s + "' is not a number");
  }
  return v;
}

void check_width(const CsvRow& row, std::size_t n) {
  if (row.fields.size() != n) {
    throw Error(ErrorKind::parse, "line " + std::to_string(row.line) + ": expected " + std::to_string(n) +
                                      " fields, got " + std::to_string(row.fields.size()));
  }
}

}  // namespace

std::string table_to_csv(const RankFrequencyTable& table) {
  std::string out = "rank,word,count\n";
  for (const auto& r : table.records()) {
    out += std::to_string(r.rank) + ',' + csv_field(r.word) + ',' + std::to_string(r.count) + '\n';
  }
  return out;
}

RankFrequencyTable table_from_csv(std::string_view text) {
  const auto rows = parse_csv(text);
  expect_header(rows, {"rank", "word", "count"});
  std::vector<RankRecord> records;
  records.reserve(rows.size() - 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    check_width(row, 3);
    records.push_back({parse_uint(row.fields[0], row.line, "rank"), row.fields[1],
                       parse_uint(row.fields[2], row.line, "count")});
  }
  return RankFrequencyTable(std::move(records));
}

std::string table_to_json(const RankFrequencyTable& table) {
  json arr = json::array();
  for (const auto& r : table.records()) arr.push_back({{"rank", r.rank}, {"word", r.word}, {"count", r.count}});
  return arr.dump(2) + "\n";
}

std::string mapping_to_csv(const RankMapping& mapping) {
  std::string out = "r,r_new\n";
  for (const auto& p : mapping.pairs()) out += std::to_string(p.rank) + ',' + format_csv_number(p.new_rank) + '\n';
  return out;
}

RankMapping mapping_from_csv(std::string_view text) {
  const auto rows = parse_csv(text);
  expect_header(rows, {"r", "r_new"});
  std::vector<RankPair> pairs;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    check_width(row, 2);
    pairs.push_back({parse_uint(row.fields[0], row.line, "r"), parse_real(row.fields[1], row.line, "r_new")});
  }
  return RankMapping(std::move(pairs));
}

std::string proportions_to_csv(const ProportionCurve& curve) {
  std::string out = "rank,proportion,n\n";
  for (const auto& p : curve.points) {
    out += std::to_string(p.rank) + ',' + format_csv_number(p.proportion) + ',' + std::to_string(p.n_corpora) + '\n';
  }
  return out;
}

std::string bins_to_csv(std::span<const BinnedPoint> bins) {
  std::string out = "gmean_rank,proportion\n";
  for (const auto& b : bins) out += format_csv_number(b.gmean_rank) + ',' + format_csv_number(b.proportion) + '\n';
  return out;
}

std::string fit_results_to_json(std::span<const FitResult> results) {
  json arr = json::array();
  for (const auto& r : results) {
    json params = json::object();
    for (const auto& [k, v] : r.named_params()) params[k] = v;
    json j{{"model", std::string(to_string(r.model))},
           {"params", params},
           {"adjusted_r2", r.adjusted_r2},
           {"r2", r.r2},
           {"n_points", r.n_points},
           {"residual_sum_squares", r.residual_sum_squares}};
    if (r.model == FitModel::brf) j["r_max"] = r.r_max;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string fitted_curves_to_csv(const FitInput& input, std::span<const FitResult> results) {
  std::string out = "model,rank,observed,fitted\n";
  for (const auto& r : results) {
    const std::string name(to_string(r.model));
    for (const auto& p : input.points) {
      out += name + ',' + format_csv_number(p.rank) + ',' + format_csv_number(p.count) + ',' +
             format_csv_number(r.predict(p.rank)) + '\n';
    }
  }
  return out;
}

std::string hill_report_to_json(const HillReport& report) {
  json j{{"mode", std::string(to_string(report.mode))},
         {"r_mid", report.fit.params.r_mid()},
         {"gamma", report.fit.params.gamma()},
         {"objective", report.fit.objective},
         {"n_pairs", report.n_pairs},
         {"alpha", report.alpha}};
  if (report.fit.params.gamma() > 1.0 && report.alpha > 0.0) {
    j["predicted_beta"] = predicted_beta(report.alpha, report.fit.params.gamma());
  }
  return j.dump(2) + "\n";
}

std::string validation_report_to_json(const ValidationReport& report) {
  json j{{"r_mid", report.fit.params.r_mid()},
         {"gamma", report.fit.params.gamma()},
         {"objective", report.fit.objective},
         {"fit_points", report.fit_points},
         {"n_points", report.n_points},
         {"n_corpora", report.n_corpora},
         {"stoplist", report.stoplist},
         {"max_rank", report.max_rank},
         {"binned_strictly_decreasing", report.binned_strictly_decreasing},
         {"binned_half_crossings", report.binned_half_crossings}};
  return j.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path.string() + "'");
  std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorKind::io, "error while reading '" + path.string() + "'");
  return s;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  thread_local std::mt19937_64 rng{std::random_device{}()};
  auto tmp = path;
  tmp += ".tmp" + std::to_string(rng() % 1000000);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::io, "cannot write '" + path.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error(ErrorKind::io, "error while writing '" + path.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::io, "cannot replace '" + path.string() + "': " + ec.message());
  }
}

}  // namespace stoprank
