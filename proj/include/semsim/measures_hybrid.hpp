#pragma once

#include <string>

#include "semsim/information_content.hpp"
#include "semsim/taxonomy.hpp"

namespace semsim {

struct HybridParams {
  double knappe_p = 0.5;
  double zhou_k = 0.5;
};

// Generalization/specification overlap over ancestor-or-self sets:
// p*|A∩B|/|A| + (1-p)*|A∩B|/|B|. In (0,1]; 1 iff the concepts coincide;
// asymmetric unless p = 0.5.
double sim_knappe(const Taxonomy& t, const std::string& c1, const std::string& c2,
                  double p = 0.5);

// Blend of a normalized shortest-path term and a normalized IC-distance term:
// 1 - k*ln(len+1)/ln(2*(deep_max-1)) - (1-k)*(ic1+ic2-2*ic(lso))/2, clamped
// at 0. Requires IC values in [0,1] (the intrinsic provider, or any provider
// whose ic never exceeds 1) and a taxonomy of depth >= 1.
double sim_zhou(const Taxonomy& t, const ICProvider& ic, const std::string& c1,
                const std::string& c2, double k = 0.5);

}  // namespace semsim
