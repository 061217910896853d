#pragma once

#include <stdexcept>
#include <string>

namespace semsim {

// Every failure mode the library reports, one code per condition.
enum class errc {
  // taxonomy construction
  cycle_detected,
  duplicate_id,
  unknown_endpoint,
  multiple_roots,
  no_root,
  unknown_concept,
  // parsing
  syntax_error,
  missing_parent_code,
  duplicate_code,
  negative_count,
  rating_out_of_scale,
  too_few_pairs,
  // information content
  empty_corpus,
  zero_frequency_concept,
  degenerate_taxonomy,
  unnormalized_ic,
  // measures
  undefined_ratio,
  both_sets_empty,
  invalid_param,
  // registry / word level
  unknown_word,
  missing_ic_provider,
  unknown_measure,
  // correlation
  length_mismatch,
  constant_sequence,
  no_covered_pairs,
};

// Stable CamelCase token for an error code ("CycleDetected", ...), used in
// diagnostics and by the CLI `validate` report.
const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message, int line = 0)
      : std::runtime_error(line > 0
                               ? std::string(errc_name(code)) + ": " + message +
                                     " (line " + std::to_string(line) + ")"
                               : std::string(errc_name(code)) + ": " + message),
        code_(code),
        line_(line) {}

  errc code() const { return code_; }
  // 1-based input line for parser errors, 0 when not applicable.
  int line() const { return line_; }

 private:
  errc code_;
  int line_;
};

}  // namespace semsim
