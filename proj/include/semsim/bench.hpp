#pragma once

#include <string>
#include <vector>

#include "semsim/measure_registry.hpp"
#include "semsim/ontology_io.hpp"

namespace semsim {

// Sample Pearson correlation; needs two equal-length non-constant sequences
// of at least 2 values.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

// Pearson over fractional ranks (ties get the average rank).
double spearman(const std::vector<double>& xs, const std::vector<double>& ys);

struct MeasureRequest {
  std::string name;
  MeasureParams params;
};

struct SkippedPair {
  int index = 0;  // position in the dataset
  std::string word1, word2;
  std::string reason;
};

struct BenchRow {
  std::string measure;
  std::string ic_kind;  // "corpus", "intrinsic" or "none"
  double pearson_r = 0.0;
  double spearman_rho = 0.0;
  int covered = 0;
  int skipped = 0;
  std::vector<SkippedPair> skipped_detail;  // not serialized
};

struct BenchReport {
  std::string dataset;
  std::vector<BenchRow> rows;
};

// Scores every dataset pair under each requested measure via word_similarity,
// skipping (and recording) pairs with unresolvable words, and correlates the
// scores against the human ratings. Distance measures are reported with
// their raw, negative-leaning correlation.
BenchReport evaluate(const Taxonomy& t, const ICProvider* ic,
                     const std::vector<MeasureRequest>& measures,
                     const BenchmarkDataset& dataset);

enum class ReportFormat { csv, markdown };

// Deterministic rendering at fixed 4-decimal precision. CSV columns:
// measure, ic_kind, pearson, spearman, covered, skipped.
std::string render_report(const BenchReport& report, ReportFormat format);

// Inverse of the CSV rendering (skip details are not representable in CSV).
BenchReport parse_report_csv(const std::string& text);

}  // namespace semsim
