#include "semsim/measures_ic.hpp"

#include <cmath>

namespace semsim {

double sim_resnik(const Taxonomy& t, const ICProvider& ic, const std::string& c1,
                  const std::string& c2) {
  return -std::log(p_mis(t, ic, c1, c2).first);
}

double sim_lin(const Taxonomy& t, const ICProvider& ic, const std::string& c1,
               const std::string& c2) {
  if (t.index_of(c1) == t.index_of(c2)) return 1.0;
  const double denom = std::log(ic.p(c1)) + std::log(ic.p(c2));
  if (denom == 0.0)
    throw error(errc::undefined_ratio,
                "both '" + c1 + "' and '" + c2 + "' have probability 1");
  return 2.0 * std::log(p_mis(t, ic, c1, c2).first) / denom;
}

double dist_jiang_conrath(const Taxonomy& t, const ICProvider& ic,
                          const std::string& c1, const std::string& c2) {
  return 2.0 * std::log(p_mis(t, ic, c1, c2).first) -
         (std::log(ic.p(c1)) + std::log(ic.p(c2)));
}

}  // namespace semsim
