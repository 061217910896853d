#include "semsim/measures_hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace semsim {

double sim_knappe(const Taxonomy& t, const std::string& c1, const std::string& c2,
                  double p) {
  if (p < 0.0 || p > 1.0)
    throw error(errc::invalid_param, "knappe p must lie in [0,1]");
  const int i1 = t.index_of(c1), i2 = t.index_of(c2);
  if (i1 == i2) return 1.0;
  const auto& a = t.closure_of(i1);
  const auto& b = t.closure_of(i2);
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  const double shared = static_cast<double>(common.size());
  return p * (shared / static_cast<double>(a.size())) +
         (1.0 - p) * (shared / static_cast<double>(b.size()));
}

double sim_zhou(const Taxonomy& t, const ICProvider& ic, const std::string& c1,
                const std::string& c2, double k) {
  if (k < 0.0 || k > 1.0)
    throw error(errc::invalid_param, "zhou k must lie in [0,1]");
  const int deep_max_nodes = t.deep_max().second;
  if (deep_max_nodes < 2)
    throw error(errc::degenerate_taxonomy, "zhou needs a taxonomy of depth >= 1");
  if (ic.max_ic() > 1.0 + 1e-9)
    throw error(errc::unnormalized_ic,
                "zhou needs IC values in [0,1]; use the intrinsic provider");

  const int len = t.shortest_path(c1, c2).edge_length;
  const double path_term =
      std::log(len + 1.0) / std::log(2.0 * (deep_max_nodes - 1));
  const std::string lso = t.lcs(c1, c2).lcs;
  const double ic_term = ((ic.ic(c1) + ic.ic(c2)) - 2.0 * ic.ic(lso)) / 2.0;
  return std::max(0.0, 1.0 - k * path_term - (1.0 - k) * ic_term);
}

}  // namespace semsim
