#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semsim/errors.hpp"

namespace semsim {

// One node of a taxonomy. Word sets are stored case-folded; synonyms always
// contain the (folded) id.
struct Concept {
  std::string id;
  std::set<std::string> synonyms;
  std::set<std::string> gloss_terms;
  std::set<std::string> feature_terms;
};

// Least common subsumer of a concept pair: the closest shared ancestor
// (fewest is-a links to the two concepts), with the Wu-Palmer quantities
// N, N1, N2.
struct LcsInfo {
  std::string lcs;
  int n = 0;   // is-a edge depth of lcs below the root
  int n1 = 0;  // min is-a edges from the first concept up to lcs
  int n2 = 0;  // min is-a edges from the second concept up to lcs
};

// Shortest is-a path between two concepts, routed through a common subsumer.
struct PathInfo {
  int edge_length = 0;
  int node_length = 1;
  int direction_changes = 0;  // 0 when one concept subsumes the other, else 1
};

// ASCII case folding used for all word lookups and word-set storage.
std::string fold_case(std::string_view word);

// Immutable rooted DAG of concepts. Built once by build_taxonomy, then all
// queries are pure reads; sharing a Taxonomy across threads is safe.
class Taxonomy {
 public:
  std::size_t size() const { return concepts_.size(); }
  const std::string& root() const { return concepts_[root_].id; }
  bool contains(std::string_view id) const;
  const Concept& at(const std::string& id) const;
  const std::vector<Concept>& concepts() const { return concepts_; }

  // Minimum is-a edge count from the root down to c.
  int depth(const std::string& id) const;
  // Maximum depth over all concepts as (edges, nodes); nodes = edges + 1.
  std::pair<int, int> deep_max() const { return {deep_max_, deep_max_ + 1}; }

  std::set<std::string> ancestors_or_self(const std::string& id) const;
  LcsInfo lcs(const std::string& c1, const std::string& c2) const;
  PathInfo shortest_path(const std::string& c1, const std::string& c2) const;
  // Number of distinct strict is-a descendants.
  int hyponym_count(const std::string& id) const;

  // All concepts whose synonym set contains the case-folded word; sorted.
  std::vector<std::string> resolve_word(std::string_view word) const;

  // Distance-1 neighborhoods, used by the feature measures.
  std::vector<std::string> isa_parents(const std::string& id) const;
  std::vector<std::string> isa_children(const std::string& id) const;
  std::vector<std::string> partof_wholes(const std::string& id) const;
  std::vector<std::string> partof_parts(const std::string& id) const;

  // Edge lists as (child, parent) / (part, whole), sorted; for serialization.
  std::vector<std::pair<std::string, std::string>> isa_edges() const;
  std::vector<std::pair<std::string, std::string>> partof_edges() const;
  std::size_t isa_edge_count() const { return isa_edge_count_; }
  std::size_t partof_edge_count() const { return partof_edge_count_; }

  // --- index-based internals, shared with the IC providers ---
  int index_of(const std::string& id) const;  // throws unknown_concept
  const std::string& id_of(int idx) const { return concepts_[idx].id; }
  // Ancestor-or-self closure as sorted index lists (precomputed).
  const std::vector<int>& closure_of(int idx) const { return closure_[idx]; }
  int depth_of(int idx) const { return depth_[idx]; }
  int hyponyms_of(int idx) const { return hyponyms_[idx]; }
  const std::vector<int>& parents_of(int idx) const { return isa_parents_[idx]; }
  const std::vector<int>& children_of(int idx) const { return isa_children_[idx]; }

 private:
  friend Taxonomy build_taxonomy(std::vector<Concept> concepts,
                                 std::vector<std::pair<std::string, std::string>> isa,
                                 std::vector<std::pair<std::string, std::string>> partof);
  Taxonomy() = default;

  // Min up-edge counts from idx to every ancestor-or-self; -1 = unreachable.
  std::vector<int> up_distances(int idx) const;

  std::vector<Concept> concepts_;  // sorted by id
  std::vector<std::vector<int>> isa_parents_, isa_children_;
  std::vector<std::vector<int>> partof_wholes_, partof_parts_;
  std::vector<std::vector<int>> closure_;  // ancestors-or-self, sorted
  std::vector<int> depth_;
  std::vector<int> hyponyms_;
  std::vector<std::pair<std::string, int>> word_index_;  // folded word -> concept
  int root_ = -1;
  int deep_max_ = 0;
  std::size_t isa_edge_count_ = 0, partof_edge_count_ = 0;
};

// Validates and freezes a taxonomy. Edges are (child, parent) / (part, whole)
// given by concept id. Duplicate edges are collapsed; the is-a relation must
// be acyclic with exactly one root reachable from every concept.
// Throws: cycle_detected, duplicate_id, unknown_endpoint, multiple_roots,
// no_root.
Taxonomy build_taxonomy(std::vector<Concept> concepts,
                        std::vector<std::pair<std::string, std::string>> isa,
                        std::vector<std::pair<std::string, std::string>> partof = {});

}  // namespace semsim
