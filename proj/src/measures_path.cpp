#include "semsim/measures_path.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <vector>

namespace semsim {

double sim_shortest_path(const Taxonomy& t, const std::string& c1,
                         const std::string& c2) {
  const int sp = t.shortest_path(c1, c2).edge_length;
  return 2.0 * t.deep_max().first - sp;
}

double link_weight(const Taxonomy& t, const std::string& parent,
                   const std::string& child) {
  const int p = t.index_of(parent), c = t.index_of(child);
  const auto& kids = t.children_of(p);
  if (!std::binary_search(kids.begin(), kids.end(), c))
    throw error(errc::invalid_param,
                "'" + child + "' is not an is-a child of '" + parent + "'");
  return 1.0 / (static_cast<double>(t.depth_of(c)) *
                static_cast<double>(kids.size()));
}

namespace {

// Per ancestor-or-self of start: (min up-edge count, min summed weight among
// minimal-edge chains). Lexicographic relaxation over the upward DAG.
std::vector<std::pair<int, double>> up_costs(const Taxonomy& t, int start) {
  const auto unreachable = std::make_pair(-1, 0.0);
  std::vector<std::pair<int, double>> best(t.concepts().size(), unreachable);
  best[start] = {0, 0.0};
  std::deque<int> queue{start};
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int p : t.parents_of(c)) {
      const double w =
          1.0 / (static_cast<double>(t.depth_of(c)) *
                 static_cast<double>(t.children_of(p).size()));
      std::pair<int, double> cand{best[c].first + 1, best[c].second + w};
      if (best[p].first < 0 || cand < best[p]) {
        best[p] = cand;
        queue.push_back(p);
      }
    }
  }
  return best;
}

}  // namespace

double sim_weighted_links(const Taxonomy& t, const std::string& c1,
                          const std::string& c2) {
  const auto up1 = up_costs(t, t.index_of(c1));
  const auto up2 = up_costs(t, t.index_of(c2));
  std::pair<int, double> best{-1, 0.0};
  for (std::size_t a = 0; a < up1.size(); ++a) {
    if (up1[a].first < 0 || up2[a].first < 0) continue;
    std::pair<int, double> cand{up1[a].first + up2[a].first,
                                up1[a].second + up2[a].second};
    if (best.first < 0 || cand < best) best = cand;
  }
  return 1.0 / (1.0 + best.second);
}

double sim_hso(const Taxonomy& t, const std::string& c1, const std::string& c2,
               const PathMeasureParams& params) {
  if (params.hso_c <= 0 || params.hso_k <= 0)
    throw error(errc::invalid_param, "hso_c and hso_k must be positive");
  const PathInfo path = t.shortest_path(c1, c2);
  const double score =
      params.hso_c - path.edge_length - params.hso_k * path.direction_changes;
  return std::max(0.0, score);
}

double sim_wu_palmer(const Taxonomy& t, const std::string& c1,
                     const std::string& c2) {
  const LcsInfo info = t.lcs(c1, c2);
  if (info.n == 0 && info.n1 == 0 && info.n2 == 0) return 1.0;  // root vs root
  return 2.0 * info.n / (info.n1 + info.n2 + 2.0 * info.n);
}

double sim_tbk(const Taxonomy& t, const std::string& c1, const std::string& c2) {
  const LcsInfo info = t.lcs(c1, c2);
  double pf = 1.0;
  if (info.n1 > 0 && info.n2 > 0) pf = 1.0 / (1.0 + std::min(info.n1, info.n2));
  return sim_wu_palmer(t, c1, c2) * pf;
}

double sim_li(const Taxonomy& t, const std::string& c1, const std::string& c2,
              const PathMeasureParams& params) {
  if (params.li_alpha < 0 || params.li_beta < 0)
    throw error(errc::invalid_param, "li_alpha and li_beta must be nonnegative");
  const int sp = t.shortest_path(c1, c2).edge_length;
  const int depth = t.lcs(c1, c2).n;
  return std::exp(-params.li_alpha * sp) * std::tanh(params.li_beta * depth);
}

double sim_leacock_chodorow(const Taxonomy& t, const std::string& c1,
                            const std::string& c2) {
  const int nodes = t.shortest_path(c1, c2).node_length;
  const int d_nodes = t.deep_max().second;
  return -std::log(nodes / (2.0 * d_nodes));
}

}  // namespace semsim
