#pragma once

#include <string>

#include "semsim/taxonomy.hpp"

namespace semsim {

struct PathMeasureParams {
  double hso_c = 8.0;
  double hso_k = 1.0;
  double li_alpha = 0.2;
  double li_beta = 0.6;
};

// 2*Max - SP with Max the taxonomy-wide maximum depth in edges. Range
// [0, 2*deep_max], maximum at identity.
double sim_shortest_path(const Taxonomy& t, const std::string& c1,
                         const std::string& c2);

// Weight of the is-a link parent->child: 1/(depth(child) * out_degree(parent)),
// depth in edges. Both deeper children and busier parents weaken the link.
double link_weight(const Taxonomy& t, const std::string& parent,
                   const std::string& child);

// Distance = minimum summed link weight along a shortest (by edge count)
// up-then-down route; score 1/(1+distance) in (0,1].
double sim_weighted_links(const Taxonomy& t, const std::string& c1,
                          const std::string& c2);

// C - SP - k*d over the up/down is-a path, clamped at 0; d is the number of
// direction changes (0 or 1 here).
double sim_hso(const Taxonomy& t, const std::string& c1, const std::string& c2,
               const PathMeasureParams& params = {});

// 2N/(N1+N2+2N) from the least common subsumer. Root-vs-root returns 1.
double sim_wu_palmer(const Taxonomy& t, const std::string& c1,
                     const std::string& c2);

// Wu-Palmer times a neighborhood penalization factor: 1 when one concept
// subsumes the other, else 1/(1+min(N1,N2)). Restores descendant-before-
// neighborhood ordering.
double sim_tbk(const Taxonomy& t, const std::string& c1, const std::string& c2);

// e^(-alpha*SP) * tanh(beta*N): exponential path decay times a saturating
// depth factor. Range [0,1).
double sim_li(const Taxonomy& t, const std::string& c1, const std::string& c2,
              const PathMeasureParams& params = {});

// -ln(node_length / (2*D)) with D the maximum depth in nodes.
double sim_leacock_chodorow(const Taxonomy& t, const std::string& c1,
                            const std::string& c2);

}  // namespace semsim
