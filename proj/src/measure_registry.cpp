#include "semsim/measure_registry.hpp"

#include <functional>

#include "semsim/measures_ic.hpp"

namespace semsim {

const char* semantics_name(Semantics s) {
  switch (s) {
    case Semantics::similarity: return "similarity";
    case Semantics::distance: return "distance";
    case Semantics::relatedness: return "relatedness";
  }
  return "?";
}

void MeasureParams::apply(const std::string& override_expr) {
  const auto eq = override_expr.find('=');
  if (eq == std::string::npos)
    throw error(errc::invalid_param, "expected name=value, got '" + override_expr + "'");
  const std::string name = override_expr.substr(0, eq);
  const std::string text = override_expr.substr(eq + 1);
  double value = 0;
  std::size_t used = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != text.size())
    throw error(errc::invalid_param, "bad value for '" + name + "': '" + text + "'");

  if (name == "hso_c") path.hso_c = value;
  else if (name == "hso_k") path.hso_k = value;
  else if (name == "li_alpha") path.li_alpha = value;
  else if (name == "li_beta") path.li_beta = value;
  else if (name == "tversky_alpha") feature.tversky_alpha = value;
  else if (name == "rodriguez_w_w") feature.w_word = value;
  else if (name == "rodriguez_w_u") feature.w_feature = value;
  else if (name == "rodriguez_w_n") feature.w_neighborhood = value;
  else if (name == "knappe_p") hybrid.knappe_p = value;
  else if (name == "zhou_k") hybrid.zhou_k = value;
  else throw error(errc::invalid_param, "unknown parameter '" + name + "'");
}

namespace {

// Description set for the concept-level Tversky token: every word attached
// to the concept, so it is nonempty for all fixtures.
std::set<std::string> description_set(const Concept& c) {
  std::set<std::string> out = c.synonyms;
  out.insert(c.gloss_terms.begin(), c.gloss_terms.end());
  out.insert(c.feature_terms.begin(), c.feature_terms.end());
  return out;
}

using Eval = std::function<double(const Taxonomy&, const ICProvider*,
                                  const std::string&, const std::string&,
                                  const MeasureParams&)>;

struct Entry {
  MeasureDescriptor desc;
  Eval eval;
};

std::vector<Entry> make_registry() {
  auto d = [](std::string name, Semantics sem, bool sp, bool density, bool depth,
              bool corpus, bool ic, bool symmetric, double lo,
              std::optional<double> hi, std::string note = "") {
    MeasureDescriptor m;
    m.name = std::move(name);
    m.semantics = sem;
    m.uses_sp = sp;
    m.uses_density = density;
    m.uses_depth = depth;
    m.needs_corpus = corpus;
    m.needs_ic = ic;
    m.symmetric = symmetric;
    m.symmetric_at_defaults = true;
    m.range_lo = lo;
    m.range_hi = hi;
    m.note = std::move(note);
    return m;
  };

  std::vector<Entry> reg;
  reg.push_back({d("path", Semantics::similarity, true, false, false, false, false,
                   true, 0.0, std::nullopt),
                 [](const Taxonomy& t, const ICProvider*, const std::string& a,
                    const std::string& b, const MeasureParams&) {
                   return sim_shortest_path(t, a, b);
                 }});
  reg.push_back({d("wlink", Semantics::similarity, true, true, false, false, false,
                   true, 0.0, 1.0),
                 [](const Taxonomy& t, const ICProvider*, const std::string& a,
                    const std::string& b, const MeasureParams&) {
                   return sim_weighted_links(t, a, b);
                 }});
  reg.push_back({d("hso", Semantics::relatedness, true, false, false, false, false,
                   true, 0.0, std::nullopt),
                 [](const Taxonomy& t, const ICProvider*, const std::string& a,
                    const std::string& b, const MeasureParams& p) {
                   return sim_hso(t, a, b, p.path);
                 }});
  reg.push_back({d("wup", Semantics::similarity, true, true, true, false, false,
                   true, 0.0, 1.0),
                 [](const Taxonomy& t, const ICProvider*, const std::string& a,
                    const std::string& b, const MeasureParams&) {
                   return sim_wu_palmer(t, a, b);
                 }});
  reg.push_back({d("tbk", Semantics::similarity, true, true, true, false, false,
                   true, 0.0, 1.0),
                 [](const Taxonomy& t, const ICProvider*, const std::string& a,
                    const std::string& b, const MeasureParams&) {
                   return sim_tbk(t, a, b);
                 }});
  reg.push_back({d("li", Semantics::similarity, true, false, true, false, false,
                   true, 0.0, 1.0),
                 [](const Taxonomy& t, const ICProvider*, const std::string& a,
                    const std::string& b, const MeasureParams& p) {
                   return sim_li(t, a, b, p.path);
                 }});
  reg.push_back({d("lch", Semantics::similarity, true, false, false, false, false,
                   true, 0.0, std::nullopt),
                 [](const Taxonomy& t, const ICProvider*, const std::string& a,
                    const std::string& b, const MeasureParams&) {
                   return sim_leacock_chodorow(t, a, b);
                 }});
  reg.push_back({d("resnik", Semantics::similarity, false, true, false, true, true,
                   true, 0.0, std::nullopt),
                 [](const Taxonomy& t, const ICProvider* ic, const std::string& a,
                    const std::string& b, const MeasureParams&) {
                   return sim_resnik(t, *ic, a, b);
                 }});
  reg.push_back({d("lord", Semantics::similarity, false, true, false, true, true,
                   true, 0.0, std::nullopt,
                   "alias of resnik; applied to the GO DAG by Lord et al."),
                 [](const Taxonomy& t, const ICProvider* ic, const std::string& a,
                    const std::string& b, const MeasureParams&) {
                   return sim_resnik(t, *ic, a, b);
                 }});
  reg.push_back({d("lin", Semantics::similarity, true, true, true, true, true,
                   true, 0.0, 1.0),
                 [](const Taxonomy& t, const ICProvider* ic, const std::string& a,
                    const std::string& b, const MeasureParams&) {
                   return sim_lin(t, *ic, a, b);
                 }});
  reg.push_back({d("jcn", Semantics::distance, true, false, true, true, true,
                   true, 0.0, std::nullopt),
                 [](const Taxonomy& t, const ICProvider* ic, const std::string& a,
                    const std::string& b, const MeasureParams&) {
                   return dist_jiang_conrath(t, *ic, a, b);
                 }});
  reg.push_back({d("tversky", Semantics::similarity, false, false, false, false,
                   false, false, 0.0, 1.0,
                   "concept-level form uses synonyms + gloss + feature terms"),
                 [](const Taxonomy& t, const ICProvider*, const std::string& a,
                    const std::string& b, const MeasureParams& p) {
                   return sim_tversky(description_set(t.at(a)),
                                      description_set(t.at(b)),
                                      p.feature.tversky_alpha);
                 }});
  reg.push_back({d("xsim", Semantics::similarity, false, false, false, false,
                   false, true, 0.0, 1.0),
                 [](const Taxonomy& t, const ICProvider*, const std::string& a,
                    const std::string& b, const MeasureParams&) {
                   return sim_xsimilarity(t, a, b);
                 }});
  reg.push_back({d("rodriguez", Semantics::similarity, true, false, false, false,
                   false, false, 0.0, 1.0),
                 [](const Taxonomy& t, const ICProvider*, const std::string& a,
                    const std::string& b, const MeasureParams& p) {
                   return sim_rodriguez(t, t, a, b, p.feature);
                 }});
  reg.push_back({d("knappe", Semantics::similarity, false, false, true, false,
                   false, false, 0.0, 1.0),
                 [](const Taxonomy& t, const ICProvider*, const std::string& a,
                    const std::string& b, const MeasureParams& p) {
                   return sim_knappe(t, a, b, p.hybrid.knappe_p);
                 }});
  reg.push_back({d("zhou", Semantics::similarity, true, false, false, false, true,
                   false, 0.0, 1.0, "requires IC values in [0,1] (intrinsic)"),
                 [](const Taxonomy& t, const ICProvider* ic, const std::string& a,
                    const std::string& b, const MeasureParams& p) {
                   return sim_zhou(t, *ic, a, b, p.hybrid.zhou_k);
                 }});
  return reg;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> reg = make_registry();
  return reg;
}

const Entry& find_entry(const std::string& name) {
  for (const auto& e : registry())
    if (e.desc.name == name) return e;
  throw error(errc::unknown_measure, "no measure '" + name + "'");
}

}  // namespace

const std::vector<MeasureDescriptor>& list_measures() {
  static const std::vector<MeasureDescriptor> descs = [] {
    std::vector<MeasureDescriptor> out;
    for (const auto& e : registry()) out.push_back(e.desc);
    return out;
  }();
  return descs;
}

const MeasureDescriptor& find_measure(const std::string& name) {
  return find_entry(name).desc;
}

double evaluate_concept_pair(const Taxonomy& t, const ICProvider* ic,
                             const std::string& measure, const MeasureParams& params,
                             const std::string& c1, const std::string& c2) {
  const Entry& entry = find_entry(measure);
  if (entry.desc.needs_ic && ic == nullptr)
    throw error(errc::missing_ic_provider,
                "measure '" + measure + "' needs an IC provider");
  return entry.eval(t, ic, c1, c2, params);
}

WordScore word_similarity(const Taxonomy& t, const ICProvider* ic,
                          const std::string& measure, const MeasureParams& params,
                          const std::string& word1, const std::string& word2) {
  const Entry& entry = find_entry(measure);
  if (entry.desc.needs_ic && ic == nullptr)
    throw error(errc::missing_ic_provider,
                "measure '" + measure + "' needs an IC provider");

  const auto senses1 = t.resolve_word(word1);
  const auto senses2 = t.resolve_word(word2);
  if (senses1.empty())
    throw error(errc::unknown_word, "'" + std::string(word1) + "' matches no concept");
  if (senses2.empty())
    throw error(errc::unknown_word, "'" + std::string(word2) + "' matches no concept");

  const bool minimize = entry.desc.semantics == Semantics::distance;
  WordScore best;
  best.candidates_considered =
      static_cast<int>(senses1.size() * senses2.size());
  bool first = true;
  for (const auto& a : senses1)
    for (const auto& b : senses2) {
      const double s = entry.eval(t, ic, a, b, params);
      if (first || (minimize ? s < best.score : s > best.score)) {
        best.score = s;
        best.chosen_pair = {a, b};
        first = false;
      }
    }
  return best;
}

}  // namespace semsim
