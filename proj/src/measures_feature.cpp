#include "semsim/measures_feature.hpp"

#include <algorithm>
#include <cmath>

namespace semsim {

namespace {

std::size_t intersection_size(const std::set<std::string>& a,
                              const std::set<std::string>& b) {
  std::size_t n = 0;
  for (const auto& w : a) n += b.count(w);
  return n;
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  const double i = static_cast<double>(intersection_size(a, b));
  const double u = static_cast<double>(a.size() + b.size()) - i;
  return i / u;
}

// Union of the synonym sets of all distance-1 neighbors via one relation.
std::set<std::string> neighbor_terms(const Taxonomy& t, const std::string& id,
                                     bool isa) {
  std::set<std::string> out;
  const auto up = isa ? t.isa_parents(id) : t.partof_wholes(id);
  const auto down = isa ? t.isa_children(id) : t.partof_parts(id);
  for (const auto& n : up)
    out.insert(t.at(n).synonyms.begin(), t.at(n).synonyms.end());
  for (const auto& n : down)
    out.insert(t.at(n).synonyms.begin(), t.at(n).synonyms.end());
  return out;
}

}  // namespace

double sim_tversky(const std::set<std::string>& set1,
                   const std::set<std::string>& set2, double alpha) {
  if (alpha < 0.0 || alpha > 1.0)
    throw error(errc::invalid_param, "tversky alpha must lie in [0,1]");
  if (set1.empty() && set2.empty())
    throw error(errc::both_sets_empty, "tversky needs a nonempty set");
  const double common = static_cast<double>(intersection_size(set1, set2));
  if (common == 0.0) return 0.0;
  const double only1 = static_cast<double>(set1.size()) - common;
  const double only2 = static_cast<double>(set2.size()) - common;
  // grouped so that (set1,set2,alpha) and (set2,set1,1-alpha) add the same
  // two products and stay bit-identical
  return common / (common + (alpha * only1 + (1.0 - alpha) * only2));
}

double sim_xsimilarity(const Taxonomy& t, const std::string& c1,
                       const std::string& c2) {
  const Concept& a = t.at(c1);
  const Concept& b = t.at(c2);
  if (intersection_size(a.synonyms, b.synonyms) > 0) return 1.0;

  const double s_isa =
      jaccard(neighbor_terms(t, c1, true), neighbor_terms(t, c2, true));
  const double s_partof =
      jaccard(neighbor_terms(t, c1, false), neighbor_terms(t, c2, false));
  const double s_neighb = std::max(s_isa, s_partof);
  const double s_descr = jaccard(a.gloss_terms, b.gloss_terms);
  return std::max(s_neighb, s_descr);
}

RodriguezDetail sim_rodriguez_detail(const Taxonomy& t_p, const Taxonomy& t_q,
                                     const std::string& c1, const std::string& c2,
                                     const FeatureParams& params) {
  if (params.w_word < 0 || params.w_feature < 0 || params.w_neighborhood < 0 ||
      std::abs(params.w_word + params.w_feature + params.w_neighborhood - 1.0) > 1e-12)
    throw error(errc::invalid_param,
                "rodriguez weights must be nonnegative and sum to 1");

  const Concept& a = t_p.at(c1);
  const Concept& b = t_q.at(c2);

  auto component = [](const std::set<std::string>& s1,
                      const std::set<std::string>& s2) -> std::optional<double> {
    if (s1.empty() && s2.empty()) return std::nullopt;
    return sim_tversky(s1, s2, 0.5);
  };

  std::set<std::string> na = neighbor_terms(t_p, c1, true);
  const auto pa = neighbor_terms(t_p, c1, false);
  na.insert(pa.begin(), pa.end());
  std::set<std::string> nb = neighbor_terms(t_q, c2, true);
  const auto pb = neighbor_terms(t_q, c2, false);
  nb.insert(pb.begin(), pb.end());

  RodriguezDetail detail;
  detail.word = component(a.synonyms, b.synonyms);
  detail.feature = component(a.feature_terms, b.feature_terms);
  detail.neighborhood = component(na, nb);
  detail.score = params.w_word * detail.word.value_or(0.0) +
                 params.w_feature * detail.feature.value_or(0.0) +
                 params.w_neighborhood * detail.neighborhood.value_or(0.0);
  return detail;
}

double sim_rodriguez(const Taxonomy& t_p, const Taxonomy& t_q,
                     const std::string& c1, const std::string& c2,
                     const FeatureParams& params) {
  return sim_rodriguez_detail(t_p, t_q, c1, c2, params).score;
}

}  // namespace semsim
