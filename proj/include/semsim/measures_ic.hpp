#pragma once

#include <string>

#include "semsim/information_content.hpp"
#include "semsim/taxonomy.hpp"

namespace semsim {

// -ln p_mis: information content of the most informative shared subsumer.
// Zero when only the root subsumes both. The registry alias `lord` maps here.
double sim_resnik(const Taxonomy& t, const ICProvider& ic, const std::string& c1,
                  const std::string& c2);

// 2*ln(p_mis) / (ln p(c1) + ln p(c2)), in [0,1]; 1 at identity. Throws
// undefined_ratio for distinct concepts that both carry probability 1.
double sim_lin(const Taxonomy& t, const ICProvider& ic, const std::string& c1,
               const std::string& c2);

// Distance form 2*ln(p_mis) - (ln p(c1) + ln p(c2)) >= 0; equals
// ic(c1) + ic(c2) - 2*sim_resnik.
double dist_jiang_conrath(const Taxonomy& t, const ICProvider& ic,
                          const std::string& c1, const std::string& c2);

}  // namespace semsim
