#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "semsim/taxonomy.hpp"

namespace semsim {

// Direct (non-cumulative) occurrence counts per concept id. Concepts absent
// from the map count as zero.
struct CorpusCounts {
  std::map<std::string, long long> counts;

  long long total() const;
  long long at(const std::string& id) const;
};

// Word pairs with averaged human similarity ratings on [scale_min, scale_max].
struct BenchmarkDataset {
  struct Pair {
    std::string word1, word2;
    double rating = 0.0;
  };
  std::string name;
  double scale_min = 0.0, scale_max = 0.0;
  std::vector<Pair> pairs;
};

// Native taxonomy text format: line-oriented UTF-8, `#` comments, fields
// separated by spaces or tabs.
//   @virtual-root <name>
//   concept <id> [syn=w1|w2|...] [gloss="..."] [feat=f1|f2|...]
//   isa <child> <parent>
//   partof <part> <whole>
// `@virtual-root` synthesizes the named root and attaches every parentless
// concept to it.
Taxonomy parse_taxonomy_text(std::string_view text);

// Canonical serialization; parse_taxonomy_text(serialize_taxonomy(t))
// rebuilds a structurally identical taxonomy.
std::string serialize_taxonomy(const Taxonomy& t);

// MeSH-style tree-number file: one `term<TAB>code` per line where code
// matches [A-Z][0-9]{2}(.[0-9]{1,3})*. A code's parent is the term owning
// its dot-prefix; single-segment codes hang off a synthesized "mesh_root".
// A term may own several codes (multiple parents).
Taxonomy parse_mesh_tree(std::string_view text);

// Corpus frequency file: `concept_id<TAB>count` lines, validated against t.
CorpusCounts parse_corpus_counts(std::string_view text, const Taxonomy& t);

// Benchmark pair file: header `#scale <min> <max>`, then
// `word1<TAB>word2<TAB>rating` lines. Order is preserved.
BenchmarkDataset parse_pair_dataset(std::string_view text,
                                    std::string_view name = "dataset");

}  // namespace semsim
