#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semsim/information_content.hpp"
#include "semsim/measures_feature.hpp"
#include "semsim/measures_hybrid.hpp"
#include "semsim/measures_path.hpp"
#include "semsim/taxonomy.hpp"

namespace semsim {

enum class Semantics { similarity, distance, relatedness };

const char* semantics_name(Semantics s);

// Published-typology metadata for one registered measure (the factor and
// source flags and the symmetric flag mirror the survey tables; the range is
// the statically known bound, open end = nullopt).
struct MeasureDescriptor {
  std::string name;
  Semantics semantics = Semantics::similarity;
  bool uses_sp = false;
  bool uses_density = false;
  bool uses_depth = false;
  bool needs_ontology = true;
  bool needs_corpus = false;
  bool needs_ic = false;  // evaluation requires an ICProvider
  bool symmetric = false;
  bool symmetric_at_defaults = true;
  double range_lo = 0.0;
  std::optional<double> range_hi;
  std::string note;
};

// All tunable parameters, one bag shared by the registry and the CLI.
struct MeasureParams {
  PathMeasureParams path;
  FeatureParams feature;
  HybridParams hybrid;

  // Applies one `name=value` override (e.g. "li_alpha=0.3").
  void apply(const std::string& override_expr);
};

struct WordScore {
  double score = 0.0;
  std::pair<std::string, std::string> chosen_pair;
  int candidates_considered = 0;
};

// The 15 measures plus the `lord` alias, in stable registry order.
const std::vector<MeasureDescriptor>& list_measures();

// Descriptor lookup; throws unknown_measure.
const MeasureDescriptor& find_measure(const std::string& name);

// Concept-level evaluation of a registered measure. `ic` may be null for
// measures that do not need a provider.
double evaluate_concept_pair(const Taxonomy& t, const ICProvider* ic,
                             const std::string& measure, const MeasureParams& params,
                             const std::string& c1, const std::string& c2);

// Word-level evaluation: resolves both words to concept sets and returns the
// best score over the cross product (max for similarity/relatedness, min for
// distance) with the achieving pair.
WordScore word_similarity(const Taxonomy& t, const ICProvider* ic,
                          const std::string& measure, const MeasureParams& params,
                          const std::string& word1, const std::string& word2);

}  // namespace semsim
