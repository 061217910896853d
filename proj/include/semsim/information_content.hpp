#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semsim/ontology_io.hpp"
#include "semsim/taxonomy.hpp"

namespace semsim {

enum class ICKind { corpus, intrinsic };

// Concept -> probability p(c) in (0,1] and information content -ln p(c).
// Immutable once constructed; p is monotone along is-a edges and p(root)=1.
class ICProvider {
 public:
  ICKind kind() const { return kind_; }
  double p(const std::string& id) const { return p_[t_->index_of(id)]; }
  double ic(const std::string& id) const { return ic_[t_->index_of(id)]; }
  double p_at(int idx) const { return p_[idx]; }
  double ic_at(int idx) const { return ic_[idx]; }
  double max_ic() const;
  const Taxonomy& taxonomy() const { return *t_; }

 private:
  friend ICProvider corpus_ic(const Taxonomy&, const CorpusCounts&, bool);
  friend ICProvider intrinsic_ic(const Taxonomy&);
  ICProvider(const Taxonomy& t, ICKind kind, std::vector<double> p,
             std::vector<double> ic)
      : t_(&t), kind_(kind), p_(std::move(p)), ic_(std::move(ic)) {}

  const Taxonomy* t_;
  ICKind kind_;
  std::vector<double> p_, ic_;
};

// Resnik-style corpus probabilities: cum(c) = own count plus each strict
// descendant's count once, p(c) = cum(c)/cum(root). With smoothing enabled,
// concepts with zero cumulative count get p = 0.5/cum(root) instead of
// raising ZeroFrequencyConcept.
ICProvider corpus_ic(const Taxonomy& t, const CorpusCounts& counts,
                     bool smoothing = false);

// Structure-only provider: ic(c) = 1 - ln(hyponyms(c)+1)/ln(N), p = e^-ic.
// Leaves score 1, the root 0. Needs at least 2 concepts.
ICProvider intrinsic_ic(const Taxonomy& t);

// Probability of the most informative subsumer: the minimum p over shared
// ancestors-or-self, with the achieving concept (ties: smallest id).
std::pair<double, std::string> p_mis(const Taxonomy& t, const ICProvider& ic,
                                     const std::string& c1, const std::string& c2);

}  // namespace semsim
