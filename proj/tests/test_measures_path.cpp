#include "semsim/measures_path.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/random_taxonomy.hpp"

using namespace semsim;
using namespace testsupport;

TEST_CASE("sim_shortest_path on FIX1") {
  const Taxonomy t = load_fix1();
  CHECK(sim_shortest_path(t, "fever", "diarrhea") == 6.0);
  CHECK(sim_shortest_path(t, "fever", "fever") == 10.0);
  CHECK(sim_shortest_path(t, "fever", "mesh") == 5.0);
}

TEST_CASE("sim_weighted_links on FIX1") {
  const Taxonomy t = load_fix1();
  CHECK(sim_weighted_links(t, "fever", "fever") == 1.0);
  // single edge into the depth-5 child of a one-child parent
  CHECK(sim_weighted_links(t, "fever", "body_temp_changes") ==
        doctest::Approx(1.0 / 1.2).epsilon(1e-12));
  // route fever-btc-sas-digestive-diarrhea: 1/5 + 1/8 + 1/8 + 1/5
  CHECK(sim_weighted_links(t, "fever", "diarrhea") ==
        doctest::Approx(1.0 / 1.65).epsilon(1e-12));
}

TEST_CASE("link_weight decreases in child depth and parent out-degree") {
  // chain: deeper child, same degree
  const Taxonomy chain = parse_taxonomy_text(
      "concept r\nconcept a\nconcept b\nconcept c\n"
      "isa a r\nisa b a\nisa c b\n");
  CHECK(link_weight(chain, "b", "c") < link_weight(chain, "r", "a"));
  // wider parent, same depth
  const Taxonomy wide = parse_taxonomy_text(
      "concept r\nconcept one\nconcept f1\nconcept f2\nconcept f3\n"
      "isa one r\nisa f1 r\nisa f2 r\nisa f3 r\n");
  const Taxonomy narrow = parse_taxonomy_text(
      "concept r\nconcept one\nisa one r\n");
  CHECK(link_weight(wide, "r", "one") < link_weight(narrow, "r", "one"));
  CHECK_THROWS_AS((void)link_weight(chain, "c", "a"), error);
}

TEST_CASE("sim_hso on FIX1") {
  const Taxonomy t = load_fix1();
  CHECK(sim_hso(t, "fever", "diarrhea") == 3.0);   // 8 - 4 - 1
  CHECK(sim_hso(t, "fever", "fever") == 8.0);
  PathMeasureParams low;
  low.hso_c = 3.0;
  CHECK(sim_hso(t, "fever", "diarrhea", low) == 0.0);  // clamp of -2
}

TEST_CASE("sim_wu_palmer worked example and conventions") {
  const Taxonomy t = load_fix1();
  CHECK(sim_wu_palmer(t, "fever", "diarrhea") == 0.6);
  CHECK(sim_wu_palmer(t, "fever", "fever") == 1.0);
  CHECK(sim_wu_palmer(t, "mesh", "mesh") == 1.0);  // root/root convention

  const Taxonomy t2 = load_fix2();
  CHECK(sim_wu_palmer(t2, "A", "D") == doctest::Approx(8.0 / 11.0).epsilon(1e-12));
}

TEST_CASE("sim_tbk restores the Fig-3 ordering") {
  const Taxonomy t2 = load_fix2();
  CHECK(sim_tbk(t2, "A", "D") == doctest::Approx(8.0 / 11.0).epsilon(1e-12));
  CHECK(sim_tbk(t2, "A", "B") == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(sim_wu_palmer(t2, "A", "D") < sim_wu_palmer(t2, "A", "B"));
  CHECK(sim_tbk(t2, "A", "D") > sim_tbk(t2, "A", "B"));
  CHECK(sim_tbk(t2, "D", "D") == 1.0);
}

TEST_CASE("sim_li on FIX1") {
  const Taxonomy t = load_fix1();
  CHECK(sim_li(t, "fever", "diarrhea") ==
        doctest::Approx(std::exp(-0.8) * std::tanh(1.8)).epsilon(1e-12));
  CHECK(sim_li(t, "fever", "diarrhea") == doctest::Approx(0.4254).epsilon(5e-5));
  CHECK(sim_li(t, "mesh", "mesh") == 0.0);
  CHECK(sim_li(t, "fever", "fever") == doctest::Approx(0.9951).epsilon(5e-5));
}

TEST_CASE("sim_leacock_chodorow on FIX1") {
  const Taxonomy t = load_fix1();
  CHECK(sim_leacock_chodorow(t, "fever", "diarrhea") ==
        doctest::Approx(-std::log(5.0 / 12.0)).epsilon(1e-12));
  CHECK(sim_leacock_chodorow(t, "fever", "fever") ==
        doctest::Approx(std::log(12.0)).epsilon(1e-12));
  CHECK(sim_leacock_chodorow(t, "fever", "mesh") ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("path measures are symmetric") {
  std::mt19937 rng(41);
  const auto raw = random_raw_taxonomy(rng, 35);
  const Taxonomy t = build(raw);
  std::uniform_int_distribution<int> pick(0, 34);
  for (int i = 0; i < 100; ++i) {
    const std::string a = node_name(pick(rng)), b = node_name(pick(rng));
    CHECK(sim_shortest_path(t, a, b) == sim_shortest_path(t, b, a));
    CHECK(sim_weighted_links(t, a, b) == sim_weighted_links(t, b, a));
    CHECK(sim_hso(t, a, b) == sim_hso(t, b, a));
    CHECK(sim_wu_palmer(t, a, b) == sim_wu_palmer(t, b, a));
    CHECK(sim_tbk(t, a, b) == sim_tbk(t, b, a));
    CHECK(sim_li(t, a, b) == sim_li(t, b, a));
    CHECK(sim_leacock_chodorow(t, a, b) == sim_leacock_chodorow(t, b, a));
  }
}

TEST_CASE("identity maximality") {
  std::mt19937 rng(43);
  const auto raw = random_raw_taxonomy(rng, 30);
  const Taxonomy t = build(raw);
  for (int i = 0; i < 30; ++i) {
    std::uniform_int_distribution<int> pick(0, 29);
    const std::string c = node_name(pick(rng)), d = node_name(pick(rng));
    CHECK(sim_shortest_path(t, c, c) >= sim_shortest_path(t, c, d));
    CHECK(sim_weighted_links(t, c, c) >= sim_weighted_links(t, c, d));
    CHECK(sim_hso(t, c, c) >= sim_hso(t, c, d));
    CHECK(sim_wu_palmer(t, c, c) >= sim_wu_palmer(t, c, d));
    CHECK(sim_tbk(t, c, c) >= sim_tbk(t, c, d));
    CHECK(sim_leacock_chodorow(t, c, c) >= sim_leacock_chodorow(t, c, d));
    // li saturates with depth: identity dominates only when c is at least as
    // deep as the pair's subsumer
    if (t.depth(c) >= t.lcs(c, d).n) CHECK(sim_li(t, c, c) >= sim_li(t, c, d));
  }
}

TEST_CASE("wu-palmer strictly decreases as N1+N2 grows under a fixed lcs") {
  // root - lcs - chain of descendants; deepening one side lowers the score
  const Taxonomy t = parse_taxonomy_text(
      "concept r\nconcept lcs\nconcept u1\nconcept d1\nconcept d2\nconcept d3\n"
      "isa lcs r\nisa u1 lcs\nisa d1 lcs\nisa d2 d1\nisa d3 d2\n");
  const double s1 = sim_wu_palmer(t, "u1", "d1");
  const double s2 = sim_wu_palmer(t, "u1", "d2");
  const double s3 = sim_wu_palmer(t, "u1", "d3");
  CHECK(s1 > s2);
  CHECK(s2 > s3);
}

TEST_CASE("ranges on random taxonomies") {
  std::mt19937 rng(47);
  for (int round = 0; round < 10; ++round) {
    const int n = std::uniform_int_distribution<int>(2, 40)(rng);
    const auto raw = random_raw_taxonomy(rng, n);
    const Taxonomy t = build(raw);
    const double max_path = 2.0 * t.deep_max().first;
    const double lch_cap = std::log(2.0 * t.deep_max().second);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < 50; ++i) {
      const std::string a = node_name(pick(rng)), b = node_name(pick(rng));
      const double path = sim_shortest_path(t, a, b);
      CHECK(path >= 0.0);
      CHECK(path <= max_path);
      CHECK((path == max_path) == (a == b));
      const double wl = sim_weighted_links(t, a, b);
      CHECK(wl > 0.0);
      CHECK(wl <= 1.0);
      const double wp = sim_wu_palmer(t, a, b);
      CHECK(wp >= 0.0);
      CHECK(wp <= 1.0);
      const double l = sim_li(t, a, b);
      CHECK(l >= 0.0);
      CHECK(l < 1.0);
      const double lc = sim_leacock_chodorow(t, a, b);
      CHECK(lc > 0.0);
      CHECK(lc <= lch_cap + 1e-12);  // -ln(1/2D) can top ln(2D) by one ulp
      CHECK(sim_hso(t, a, b) >= 0.0);
    }
  }
}

TEST_CASE("parameter validation") {
  const Taxonomy t = load_fix1();
  PathMeasureParams bad;
  bad.hso_c = 0.0;
  CHECK_THROWS_AS((void)sim_hso(t, "fever", "fever", bad), error);
  PathMeasureParams neg;
  neg.li_alpha = -1.0;
  CHECK_THROWS_AS((void)sim_li(t, "fever", "fever", neg), error);
  CHECK_THROWS_AS((void)sim_wu_palmer(t, "fever", "nope"), error);
}
