// Command-line front end: score word pairs, run benchmark correlations, and
// inspect taxonomies. Exit codes: 0 ok, 2 usage or input error, 3 failed
// lookup (word/measure/concept), 4 empty benchmark result.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semsim/bench.hpp"
#include "semsim/information_content.hpp"
#include "semsim/measure_registry.hpp"
#include "semsim/ontology_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitLookup = 3;
constexpr int kExitEmpty = 4;

int exit_code_for(const semsim::error& e) {
  switch (e.code()) {
    case semsim::errc::unknown_word:
    case semsim::errc::unknown_measure:
    case semsim::errc::unknown_concept:
      return kExitLookup;
    case semsim::errc::no_covered_pairs:
      return kExitEmpty;
    default:
      return kExitUsage;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw semsim::error(semsim::errc::invalid_param, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string format4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string file_stem(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = name.find_last_of('.');
  return dot == std::string::npos ? name : name.substr(0, dot);
}

struct CliConfig {
  std::string ontology_path;
  std::string ontology2_path;
  std::string corpus_path;
  std::string ic_kind = "none";  // corpus | intrinsic | none
  std::string measure_list;
  std::vector<std::string> param_overrides;
  std::string format = "csv";
  std::string dataset_path;

  semsim::MeasureParams params() const {
    semsim::MeasureParams p;
    for (const auto& expr : param_overrides) p.apply(expr);
    return p;
  }

  std::vector<std::string> measures() const {
    std::vector<std::string> out;
    std::istringstream ss(measure_list);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) out.push_back(tok);
    return out;
  }

  semsim::Taxonomy load_ontology() const {
    return semsim::parse_taxonomy_text(read_file(ontology_path));
  }

  std::optional<semsim::ICProvider> load_ic(const semsim::Taxonomy& t) const {
    if (ic_kind == "none") return std::nullopt;
    if (ic_kind == "intrinsic") return semsim::intrinsic_ic(t);
    if (ic_kind == "corpus") {
      if (corpus_path.empty())
        throw semsim::error(semsim::errc::invalid_param,
                            "--ic corpus requires --corpus PATH");
      return semsim::corpus_ic(t, semsim::parse_corpus_counts(read_file(corpus_path), t));
    }
    throw semsim::error(semsim::errc::invalid_param,
                        "--ic must be corpus, intrinsic or none");
  }
};

void add_common_options(CLI::App* cmd, CliConfig& cfg, bool need_ontology = true) {
  auto* ont = cmd->add_option("--ontology", cfg.ontology_path, "taxonomy file (native format)");
  if (need_ontology) ont->required();
  cmd->add_option("--ontology2", cfg.ontology2_path, "second taxonomy (rodriguez)");
  cmd->add_option("--corpus", cfg.corpus_path, "corpus frequency file");
  cmd->add_option("--ic", cfg.ic_kind, "IC provider kind: corpus|intrinsic|none")
      ->check(CLI::IsMember({"corpus", "intrinsic", "none"}));
  cmd->add_option("--measure,--measures", cfg.measure_list,
                  "measure token(s), comma separated");
  cmd->add_option("--param", cfg.param_overrides, "parameter override name=value")
      ->allow_extra_args(false);
  cmd->add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"csv", "markdown"}));
  cmd->add_option("--dataset", cfg.dataset_path, "benchmark pair file");
}

int run_sim(const CliConfig& cfg, const std::string& w1, const std::string& w2) {
  const auto measures = cfg.measures();
  if (measures.size() != 1)
    throw semsim::error(semsim::errc::invalid_param, "sim needs exactly one --measure");
  const std::string& name = measures[0];
  const auto t = cfg.load_ontology();
  const auto ic = cfg.load_ic(t);
  const auto params = cfg.params();

  if (name == "rodriguez" && !cfg.ontology2_path.empty()) {
    // cross-ontology form: w1 in the first taxonomy, w2 in the second
    const auto t2 = semsim::parse_taxonomy_text(read_file(cfg.ontology2_path));
    const auto s1 = t.resolve_word(w1);
    const auto s2 = t2.resolve_word(w2);
    if (s1.empty())
      throw semsim::error(semsim::errc::unknown_word, "'" + w1 + "' matches no concept");
    if (s2.empty())
      throw semsim::error(semsim::errc::unknown_word, "'" + w2 + "' matches no concept");
    double best = -1;
    std::pair<std::string, std::string> chosen;
    for (const auto& a : s1)
      for (const auto& b : s2) {
        const double s = semsim::sim_rodriguez(t, t2, a, b, params.feature);
        if (s > best) {
          best = s;
          chosen = {a, b};
        }
      }
    std::cout << name << '\t' << w1 << '\t' << w2 << '\t' << format4(best) << '\t'
              << chosen.first << '\t' << chosen.second << '\n';
    return kExitOk;
  }

  const auto ws = semsim::word_similarity(t, ic ? &*ic : nullptr, name, params, w1, w2);
  std::cout << name << '\t' << w1 << '\t' << w2 << '\t' << format4(ws.score) << '\t'
            << ws.chosen_pair.first << '\t' << ws.chosen_pair.second << '\n';
  return kExitOk;
}

int run_bench(const CliConfig& cfg) {
  if (cfg.dataset_path.empty())
    throw semsim::error(semsim::errc::invalid_param, "bench requires --dataset");
  const auto measures = cfg.measures();
  if (measures.empty())
    throw semsim::error(semsim::errc::invalid_param, "bench needs --measures");
  const auto t = cfg.load_ontology();
  const auto ic = cfg.load_ic(t);
  const auto dataset = semsim::parse_pair_dataset(read_file(cfg.dataset_path),
                                                  file_stem(cfg.dataset_path));
  std::vector<semsim::MeasureRequest> requests;
  for (const auto& name : measures) requests.push_back({name, cfg.params()});
  const auto report = semsim::evaluate(t, ic ? &*ic : nullptr, requests, dataset);
  std::cout << semsim::render_report(report, cfg.format == "markdown"
                                                 ? semsim::ReportFormat::markdown
                                                 : semsim::ReportFormat::csv);
  return kExitOk;
}

int run_lcs(const CliConfig& cfg, const std::string& w1, const std::string& w2) {
  const auto t = cfg.load_ontology();
  const auto s1 = t.resolve_word(w1);
  const auto s2 = t.resolve_word(w2);
  if (s1.empty())
    throw semsim::error(semsim::errc::unknown_word, "'" + w1 + "' matches no concept");
  if (s2.empty())
    throw semsim::error(semsim::errc::unknown_word, "'" + w2 + "' matches no concept");
  // deepest subsumer over the sense cross product
  semsim::LcsInfo best;
  bool first = true;
  for (const auto& a : s1)
    for (const auto& b : s2) {
      const auto info = t.lcs(a, b);
      if (first || info.n > best.n) {
        best = info;
        first = false;
      }
    }
  std::cout << best.lcs << "\tn=" << best.n << "\tn1=" << best.n1
            << "\tn2=" << best.n2 << '\n';
  return kExitOk;
}

int run_stats(const CliConfig& cfg) {
  const auto t = cfg.load_ontology();
  const auto [edges, nodes] = t.deep_max();
  std::cout << "concepts=" << t.size() << " isa=" << t.isa_edge_count()
            << " partof=" << t.partof_edge_count() << " deep_max_edges=" << edges
            << " deep_max_nodes=" << nodes << '\n';
  return kExitOk;
}

int run_validate(const CliConfig& cfg) {
  try {
    cfg.load_ontology();
  } catch (const semsim::error& e) {
    std::cout << e.what() << '\n';
    return kExitUsage;
  }
  std::cout << "OK\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ontology semantic-similarity toolkit"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string w1, w2;

  auto* sim = app.add_subcommand("sim", "score one word pair under one measure");
  add_common_options(sim, cfg);
  sim->add_option("word1", w1)->required();
  sim->add_option("word2", w2)->required();

  auto* bench = app.add_subcommand("bench", "correlate measures against a rated dataset");
  add_common_options(bench, cfg);

  auto* lcs = app.add_subcommand("lcs", "least common subsumer of two words");
  add_common_options(lcs, cfg);
  lcs->add_option("word1", w1)->required();
  lcs->add_option("word2", w2)->required();

  auto* stats = app.add_subcommand("stats", "taxonomy summary counts");
  add_common_options(stats, cfg);

  auto* validate = app.add_subcommand("validate", "parse a taxonomy and report the first error");
  add_common_options(validate, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sim->parsed()) return run_sim(cfg, w1, w2);
    if (bench->parsed()) return run_bench(cfg);
    if (lcs->parsed()) return run_lcs(cfg, w1, w2);
    if (stats->parsed()) return run_stats(cfg);
    if (validate->parsed()) return run_validate(cfg);
  } catch (const semsim::error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
