#include "semsim/ontology_io.hpp"

#include <functional>
#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/random_taxonomy.hpp"

using namespace semsim;
using namespace testsupport;

namespace {

bool fails_with(errc code, int line, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code() == code && (line == 0 || e.line() == line);
  }
  return false;
}

bool same_structure(const Taxonomy& a, const Taxonomy& b) {
  if (a.size() != b.size() || a.root() != b.root()) return false;
  if (a.isa_edges() != b.isa_edges()) return false;
  if (a.partof_edges() != b.partof_edges()) return false;
  for (const auto& ca : a.concepts()) {
    const Concept& cb = b.at(ca.id);
    if (ca.synonyms != cb.synonyms || ca.gloss_terms != cb.gloss_terms ||
        ca.feature_terms != cb.feature_terms)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parse_taxonomy_text reads FIX1") {
  const Taxonomy t = load_fix1();
  CHECK(t.size() == 8);
  CHECK(t.deep_max().first == 5);
  CHECK(t.at("fever").synonyms == std::set<std::string>{"fever", "pyrexia"});
}

TEST_CASE("parse_taxonomy_text attribute fields") {
  const Taxonomy t = parse_taxonomy_text(
      "concept thing syn=Widget|gadget gloss=\"a small useful object\" feat=metal|round\n"
      "concept top\n"
      "isa thing top\n");
  const Concept& c = t.at("thing");
  CHECK(c.synonyms == std::set<std::string>{"thing", "widget", "gadget"});
  CHECK(c.gloss_terms == std::set<std::string>{"a", "small", "useful", "object"});
  CHECK(c.feature_terms == std::set<std::string>{"metal", "round"});
}

TEST_CASE("parse_taxonomy_text error cases") {
  CHECK(fails_with(errc::no_root, 0, [] { parse_taxonomy_text(""); }));
  CHECK(fails_with(errc::multiple_roots, 0,
                   [] { parse_taxonomy_text("concept a\nconcept b\n"); }));
  CHECK(fails_with(errc::syntax_error, 2,
                   [] { parse_taxonomy_text("concept a\nisa a\n"); }));
  CHECK(fails_with(errc::syntax_error, 1,
                   [] { parse_taxonomy_text("concpt a\n"); }));
  CHECK(fails_with(errc::syntax_error, 3, [] {
    parse_taxonomy_text("concept a\nconcept b\nconcept c glos=\"x\"\nisa b a\nisa c a\n");
  }));
  CHECK(fails_with(errc::cycle_detected, 0, [] {
    parse_taxonomy_text("concept a\nconcept b\nisa a b\nisa b a\n");
  }));
}

TEST_CASE("virtual root adopts orphans") {
  const Taxonomy t = parse_taxonomy_text(
      "@virtual-root all\nconcept a\nconcept b\nconcept c\nisa c a\n");
  CHECK(t.root() == "all");
  CHECK(t.size() == 4);
  CHECK(t.depth("a") == 1);
  CHECK(t.depth("b") == 1);
  CHECK(t.depth("c") == 2);
}

TEST_CASE("round-trip: fixtures") {
  for (const auto& t : {load_fix1(), load_fix2()}) {
    const std::string text = serialize_taxonomy(t);
    CHECK(same_structure(t, parse_taxonomy_text(text)));
    CHECK(serialize_taxonomy(parse_taxonomy_text(text)) == text);
  }
}

TEST_CASE("round-trip: single concept") {
  const Taxonomy t = parse_taxonomy_text("concept only\n");
  CHECK(serialize_taxonomy(t) == "concept only syn=only\n");
  CHECK(same_structure(t, parse_taxonomy_text(serialize_taxonomy(t))));
}

TEST_CASE("round-trip: 100 random taxonomies") {
  for (unsigned seed = 0; seed < 100; ++seed) {
    std::mt19937 rng(seed);
    const int n = std::uniform_int_distribution<int>(1, 40)(rng);
    const auto raw = random_raw_taxonomy(rng, n, 3, false, /*with_words=*/true,
                                         /*with_partof=*/true);
    const Taxonomy t = build(raw);
    const std::string text = serialize_taxonomy(t);
    const Taxonomy back = parse_taxonomy_text(text);
    REQUIRE(same_structure(t, back));
    // parser determinism: same bytes, same canonical form
    CHECK(serialize_taxonomy(back) == text);
  }
}

TEST_CASE("parse_mesh_tree builds the dot-prefix hierarchy") {
  const Taxonomy t =
      parse_mesh_tree("signs\tC23\nfever\tC23.888\nchill\tC23.888.100\n");
  CHECK(t.size() == 4);
  CHECK(t.root() == "mesh_root");
  CHECK(t.depth("signs") == 1);
  CHECK(t.depth("fever") == 2);
  CHECK(t.depth("chill") == 3);
  CHECK(t.isa_edges() ==
        std::vector<std::pair<std::string, std::string>>{
            {"chill", "fever"}, {"fever", "signs"}, {"signs", "mesh_root"}});
}

TEST_CASE("parse_mesh_tree single line and space separator") {
  const Taxonomy t = parse_mesh_tree("signs C23\n");
  CHECK(t.size() == 2);
  CHECK(t.depth("signs") == 1);
}

TEST_CASE("parse_mesh_tree multi-code terms become multi-parent concepts") {
  const Taxonomy t = parse_mesh_tree(
      "alpha\tC23\nbeta\tD12\nboth\tC23.100\nboth\tD12.200\n");
  CHECK(t.isa_parents("both") == std::vector<std::string>{"alpha", "beta"});
}

TEST_CASE("parse_mesh_tree error cases") {
  CHECK(fails_with(errc::missing_parent_code, 0,
                   [] { parse_mesh_tree("fever\tC23.888\n"); }));
  CHECK(fails_with(errc::duplicate_code, 2,
                   [] { parse_mesh_tree("a\tC23\nb\tC23\n"); }));
  CHECK(fails_with(errc::syntax_error, 1, [] { parse_mesh_tree("a\tc23\n"); }));
  CHECK(fails_with(errc::syntax_error, 1, [] { parse_mesh_tree("a\tC23.\n"); }));
}

TEST_CASE("mesh prefix-depth property") {
  // complete prefix family: depth = dot count + 1
  std::string text;
  std::vector<std::pair<std::string, int>> expected;
  int serial = 0;
  for (int top = 0; top < 3; ++top) {
    std::string code = "A" + std::to_string(10 + top);
    for (int seg = 0; seg <= 3; ++seg) {
      const std::string term = "t" + std::to_string(serial++);
      text += term + "\t" + code + "\n";
      expected.emplace_back(term, seg + 1);
      code += "." + std::to_string(100 + seg);
    }
  }
  const Taxonomy t = parse_mesh_tree(text);
  for (const auto& [term, depth] : expected) CHECK(t.depth(term) == depth);
}

TEST_CASE("parse_corpus_counts on FIX-IC") {
  const Taxonomy t = load_fix1();
  const CorpusCounts counts = load_fix_ic_counts(t);
  CHECK(counts.total() == 1000);
  CHECK(counts.at("fever") == 50);
  CHECK(counts.at("body_temp_changes") == 0);
}

TEST_CASE("parse_corpus_counts edge cases") {
  const Taxonomy t = load_fix1();
  CHECK(parse_corpus_counts("", t).total() == 0);
  CHECK(fails_with(errc::unknown_concept, 1,
                   [&] { parse_corpus_counts("ghost\t5\n", t); }));
  CHECK(fails_with(errc::negative_count, 1,
                   [&] { parse_corpus_counts("fever\t-3\n", t); }));
  CHECK(fails_with(errc::syntax_error, 1,
                   [&] { parse_corpus_counts("fever\tfive\n", t); }));
}

TEST_CASE("parse_pair_dataset reads mini8") {
  const BenchmarkDataset ds = load_mini8();
  CHECK(ds.pairs.size() == 8);
  CHECK(ds.scale_min == 0.0);
  CHECK(ds.scale_max == 4.0);
  CHECK(ds.pairs.front().word1 == "fever");
  CHECK(ds.pairs.front().word2 == "pyrexia");
  CHECK(ds.pairs.front().rating == 4.0);
  CHECK(ds.pairs.back().rating == 0.3);
}

TEST_CASE("parse_pair_dataset takes a 30-pair file") {
  std::string text = "#scale 0 4\n";
  for (int i = 0; i < 30; ++i)
    text += "word" + std::to_string(i) + "\tother" + std::to_string(i) + "\t" +
            std::to_string(i % 5) + ".0\n";
  const BenchmarkDataset ds = parse_pair_dataset(text, "mc30");
  CHECK(ds.pairs.size() == 30);
  CHECK(ds.name == "mc30");
}

TEST_CASE("parse_pair_dataset error cases") {
  CHECK(fails_with(errc::too_few_pairs, 0, [] { parse_pair_dataset(""); }));
  CHECK(fails_with(errc::too_few_pairs, 0, [] {
    parse_pair_dataset("#scale 0 4\na\tb\t1.0\n");
  }));
  CHECK(fails_with(errc::rating_out_of_scale, 2, [] {
    parse_pair_dataset("#scale 0 4\na\tb\t5.0\nc\td\t1.0\n");
  }));
  CHECK(fails_with(errc::syntax_error, 1, [] {
    parse_pair_dataset("a\tb\t1.0\nc\td\t2.0\n");
  }));
  CHECK(fails_with(errc::syntax_error, 1, [] {
    parse_pair_dataset("#scale 4 0\na\tb\t1.0\n");
  }));
}

TEST_CASE("CRLF input parses like LF") {
  const Taxonomy t = parse_taxonomy_text("concept a\r\nconcept b\r\nisa b a\r\n");
  CHECK(t.size() == 2);
  CHECK(t.root() == "a");
}
