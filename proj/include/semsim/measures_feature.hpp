#pragma once

#include <optional>
#include <set>
#include <string>

#include "semsim/taxonomy.hpp"

namespace semsim {

struct FeatureParams {
  double tversky_alpha = 0.5;
  // Rodriguez component weights: synonym words, features, neighborhoods.
  double w_word = 1.0 / 3.0;
  double w_feature = 1.0 / 3.0;
  double w_neighborhood = 1.0 / 3.0;
};

// Tversky ratio model over word sets:
// |A∩B| / (|A∩B| + alpha*|A-B| + (1-alpha)*|B-A|), in [0,1]; 1 iff the sets
// are equal, asymmetric unless alpha = 0.5.
double sim_tversky(const std::set<std::string>& set1,
                   const std::set<std::string>& set2, double alpha = 0.5);

// X-similarity: 1 when the synonym sets overlap; otherwise the maximum of
// per-relation neighborhood Jaccard (is-a, part-of, radius 1) and gloss-term
// Jaccard.
double sim_xsimilarity(const Taxonomy& t, const std::string& c1,
                       const std::string& c2);

// Per-component detail of the Rodriguez-Egenhofer score. A component whose
// two sets are both empty is undefined and contributes 0.
struct RodriguezDetail {
  std::optional<double> word;
  std::optional<double> feature;
  std::optional<double> neighborhood;
  double score = 0.0;
};

RodriguezDetail sim_rodriguez_detail(const Taxonomy& t_p, const Taxonomy& t_q,
                                     const std::string& c1, const std::string& c2,
                                     const FeatureParams& params = {});

// Weighted blend of three Tversky evaluations (alpha = 0.5): synonym sets,
// feature terms, and distance-1 semantic neighborhoods. Works within one
// taxonomy or across two.
double sim_rodriguez(const Taxonomy& t_p, const Taxonomy& t_q,
                     const std::string& c1, const std::string& c2,
                     const FeatureParams& params = {});

}  // namespace semsim
