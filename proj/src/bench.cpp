#include "semsim/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace semsim {

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size())
    throw error(errc::length_mismatch,
                "sequences of length " + std::to_string(xs.size()) + " and " +
                    std::to_string(ys.size()));
  const std::size_t n = xs.size();
  if (n < 2)
    throw error(errc::length_mismatch, "correlation needs at least 2 values");

  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw error(errc::constant_sequence, "correlation of a constant sequence");
  return sxy / std::sqrt(sxx * syy);
}

namespace {

std::vector<double> fractional_ranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

std::string format4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size())
    throw error(errc::length_mismatch,
                "sequences of length " + std::to_string(xs.size()) + " and " +
                    std::to_string(ys.size()));
  return pearson(fractional_ranks(xs), fractional_ranks(ys));
}

BenchReport evaluate(const Taxonomy& t, const ICProvider* ic,
                     const std::vector<MeasureRequest>& measures,
                     const BenchmarkDataset& dataset) {
  BenchReport report;
  report.dataset = dataset.name;

  for (const auto& request : measures) {
    const MeasureDescriptor& desc = find_measure(request.name);
    BenchRow row;
    row.measure = request.name;
    row.ic_kind = !desc.needs_ic  ? "none"
                  : ic == nullptr ? "none"
                  : ic->kind() == ICKind::corpus ? "corpus"
                                                 : "intrinsic";

    // Scores collected keyed by pair index so the report is independent of
    // evaluation order.
    std::vector<double> scores, ratings;
    for (std::size_t i = 0; i < dataset.pairs.size(); ++i) {
      const auto& pair = dataset.pairs[i];
      try {
        const WordScore ws = word_similarity(t, ic, request.name, request.params,
                                             pair.word1, pair.word2);
        scores.push_back(ws.score);
        ratings.push_back(pair.rating);
      } catch (const error& e) {
        if (e.code() != errc::unknown_word) throw;
        row.skipped_detail.push_back(
            {static_cast<int>(i), pair.word1, pair.word2, e.what()});
      }
    }
    row.covered = static_cast<int>(scores.size());
    row.skipped = static_cast<int>(row.skipped_detail.size());
    if (row.covered == 0)
      throw error(errc::no_covered_pairs,
                  "no dataset pair is resolvable against the taxonomy");
    row.pearson_r = pearson(scores, ratings);
    row.spearman_rho = spearman(scores, ratings);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string render_report(const BenchReport& report, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::csv) {
    out << "measure,ic_kind,pearson,spearman,covered,skipped\n";
    for (const auto& row : report.rows)
      out << row.measure << ',' << row.ic_kind << ',' << format4(row.pearson_r)
          << ',' << format4(row.spearman_rho) << ',' << row.covered << ','
          << row.skipped << '\n';
  } else {
    out << "| measure | ic_kind | pearson | spearman | covered | skipped |\n";
    out << "|---|---|---|---|---|---|\n";
    for (const auto& row : report.rows)
      out << "| " << row.measure << " | " << row.ic_kind << " | "
          << format4(row.pearson_r) << " | " << format4(row.spearman_rho)
          << " | " << row.covered << " | " << row.skipped << " |\n";
  }
  return out.str();
}

BenchReport parse_report_csv(const std::string& text) {
  BenchReport report;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line != "measure,ic_kind,pearson,spearman,covered,skipped")
    throw error(errc::syntax_error, "bad report header", 1);
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string field;
    std::vector<std::string> cols;
    while (std::getline(fields, field, ',')) cols.push_back(field);
    if (cols.size() != 6)
      throw error(errc::syntax_error, "expected 6 columns", lineno);
    BenchRow row;
    row.measure = cols[0];
    row.ic_kind = cols[1];
    try {
      row.pearson_r = std::stod(cols[2]);
      row.spearman_rho = std::stod(cols[3]);
      row.covered = std::stoi(cols[4]);
      row.skipped = std::stoi(cols[5]);
    } catch (const std::exception&) {
      throw error(errc::syntax_error, "bad numeric field", lineno);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace semsim
