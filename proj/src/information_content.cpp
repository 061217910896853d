#include "semsim/information_content.hpp"

#include <algorithm>
#include <cmath>

namespace semsim {

double ICProvider::max_ic() const {
  return *std::max_element(ic_.begin(), ic_.end());
}

ICProvider corpus_ic(const Taxonomy& t, const CorpusCounts& counts, bool smoothing) {
  const int n = static_cast<int>(t.size());
  std::vector<long long> own(n, 0);
  for (const auto& [id, count] : counts.counts) {
    if (count < 0) throw error(errc::negative_count, "negative count for '" + id + "'");
    own[t.index_of(id)] = count;
  }

  // closure lists already count each descendant once, so summing own counts
  // over "c has a in its closure" is the DAG-safe cumulative count.
  std::vector<long long> cum(n, 0);
  for (int c = 0; c < n; ++c)
    for (int a : t.closure_of(c)) cum[a] += own[c];

  const int root = t.index_of(t.root());
  const long long total = cum[root];
  if (total <= 0) throw error(errc::empty_corpus, "total corpus count is zero");

  std::vector<double> p(n), ic(n);
  for (int i = 0; i < n; ++i) {
    if (cum[i] == 0) {
      if (!smoothing)
        throw error(errc::zero_frequency_concept,
                    "'" + t.id_of(i) + "' has zero cumulative frequency");
      p[i] = 0.5 / static_cast<double>(total);
    } else {
      p[i] = static_cast<double>(cum[i]) / static_cast<double>(total);
    }
    ic[i] = -std::log(p[i]);
  }
  return ICProvider(t, ICKind::corpus, std::move(p), std::move(ic));
}

ICProvider intrinsic_ic(const Taxonomy& t) {
  const int n = static_cast<int>(t.size());
  if (n < 2)
    throw error(errc::degenerate_taxonomy,
                "intrinsic IC needs at least 2 concepts");
  const double log_n = std::log(static_cast<double>(n));
  std::vector<double> p(n), ic(n);
  for (int i = 0; i < n; ++i) {
    ic[i] = 1.0 - std::log(static_cast<double>(t.hyponyms_of(i)) + 1.0) / log_n;
    p[i] = std::exp(-ic[i]);
  }
  return ICProvider(t, ICKind::intrinsic, std::move(p), std::move(ic));
}

std::pair<double, std::string> p_mis(const Taxonomy& t, const ICProvider& ic,
                                     const std::string& c1, const std::string& c2) {
  const auto& a = t.closure_of(t.index_of(c1));
  const auto& b = t.closure_of(t.index_of(c2));
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  // minimum p; ties go to the most specific (deepest) subsumer, then the
  // smallest id (iteration is in id order)
  int best = -1;
  for (int cand : common) {
    if (best < 0 || ic.p_at(cand) < ic.p_at(best) ||
        (ic.p_at(cand) == ic.p_at(best) && t.depth_of(cand) > t.depth_of(best)))
      best = cand;
  }
  return {ic.p_at(best), t.id_of(best)};
}

}  // namespace semsim
