#include "semsim/ontology_io.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace semsim {

long long CorpusCounts::total() const {
  long long sum = 0;
  for (const auto& [_, c] : counts) sum += c;
  return sum;
}

long long CorpusCounts::at(const std::string& id) const {
  auto it = counts.find(id);
  return it == counts.end() ? 0 : it->second;
}

namespace {

// Splits text into lines, accepting LF and CRLF.
std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.emplace_back(text.substr(start));
      break;
    }
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    start = nl + 1;
  }
  return lines;
}

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

// Whitespace tokenizer that keeps `key="..."` fields intact.
std::vector<std::string> tokenize(const std::string& line, int lineno) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::string tok;
    bool in_quotes = false;
    while (i < line.size()) {
      char c = line[i];
      if (c == '"') {
        in_quotes = !in_quotes;
        tok.push_back(c);
        ++i;
      } else if (!in_quotes && std::isspace(static_cast<unsigned char>(c))) {
        break;
      } else {
        tok.push_back(c);
        ++i;
      }
    }
    if (in_quotes)
      throw error(errc::syntax_error, "unterminated quote", lineno);
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

std::set<std::string> split_words(const std::string& value, char sep) {
  std::set<std::string> out;
  std::string cur;
  std::istringstream ss(value);
  while (std::getline(ss, cur, sep))
    if (!cur.empty()) out.insert(cur);
  return out;
}

double parse_number(const std::string& token, int lineno) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw error(errc::syntax_error, "expected a number, got '" + token + "'", lineno);
  }
  if (used != token.size())
    throw error(errc::syntax_error, "expected a number, got '" + token + "'", lineno);
  return v;
}

}  // namespace

Taxonomy parse_taxonomy_text(std::string_view text) {
  std::vector<Concept> concepts;
  std::vector<std::pair<std::string, std::string>> isa, partof;
  std::string virtual_root;

  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int lineno = static_cast<int>(li) + 1;
    const std::string& line = lines[li];
    if (is_blank(line)) continue;
    auto tokens = tokenize(line, lineno);
    if (tokens.empty() || tokens[0][0] == '#') continue;

    const std::string& kw = tokens[0];
    if (kw == "@virtual-root") {
      if (tokens.size() != 2)
        throw error(errc::syntax_error, "@virtual-root takes one name", lineno);
      virtual_root = tokens[1];
    } else if (kw == "concept") {
      if (tokens.size() < 2)
        throw error(errc::syntax_error, "concept line needs an id", lineno);
      Concept c;
      c.id = tokens[1];
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        const std::string& field = tokens[i];
        auto eq = field.find('=');
        if (eq == std::string::npos)
          throw error(errc::syntax_error, "bad field '" + field + "'", lineno);
        std::string key = field.substr(0, eq), value = field.substr(eq + 1);
        if (key == "syn") {
          c.synonyms = split_words(value, '|');
        } else if (key == "feat") {
          c.feature_terms = split_words(value, '|');
        } else if (key == "gloss") {
          if (value.size() < 2 || value.front() != '"' || value.back() != '"')
            throw error(errc::syntax_error, "gloss value must be quoted", lineno);
          c.gloss_terms = split_words(value.substr(1, value.size() - 2), ' ');
        } else {
          throw error(errc::syntax_error, "unknown field '" + key + "'", lineno);
        }
      }
      concepts.push_back(std::move(c));
    } else if (kw == "isa" || kw == "partof") {
      if (tokens.size() != 3)
        throw error(errc::syntax_error, kw + " line needs two concept ids", lineno);
      (kw == "isa" ? isa : partof).emplace_back(tokens[1], tokens[2]);
    } else {
      throw error(errc::syntax_error, "unknown keyword '" + kw + "'", lineno);
    }
  }

  if (!virtual_root.empty()) {
    std::unordered_set<std::string> has_parent, declared;
    for (const auto& [child, _] : isa) has_parent.insert(child);
    for (const auto& c : concepts) declared.insert(c.id);
    if (!declared.count(virtual_root)) {
      Concept root;
      root.id = virtual_root;
      concepts.push_back(std::move(root));
    }
    for (const auto& c : concepts)
      if (c.id != virtual_root && !has_parent.count(c.id))
        isa.emplace_back(c.id, virtual_root);
  }

  return build_taxonomy(std::move(concepts), std::move(isa), std::move(partof));
}

std::string serialize_taxonomy(const Taxonomy& t) {
  std::ostringstream out;
  for (const auto& c : t.concepts()) {
    out << "concept " << c.id;
    out << " syn=";
    bool first = true;
    for (const auto& w : c.synonyms) {
      if (!first) out << '|';
      out << w;
      first = false;
    }
    if (!c.gloss_terms.empty()) {
      out << " gloss=\"";
      first = true;
      for (const auto& w : c.gloss_terms) {
        if (!first) out << ' ';
        out << w;
        first = false;
      }
      out << '"';
    }
    if (!c.feature_terms.empty()) {
      out << " feat=";
      first = true;
      for (const auto& w : c.feature_terms) {
        if (!first) out << '|';
        out << w;
        first = false;
      }
    }
    out << '\n';
  }
  for (const auto& [child, parent] : t.isa_edges())
    out << "isa " << child << ' ' << parent << '\n';
  for (const auto& [part, whole] : t.partof_edges())
    out << "partof " << part << ' ' << whole << '\n';
  return out.str();
}

Taxonomy parse_mesh_tree(std::string_view text) {
  static const std::regex code_re(R"([A-Z][0-9]{2}(\.[0-9]{1,3})*)");

  std::unordered_map<std::string, std::string> owner_of_code;  // code -> term
  std::vector<std::pair<std::string, std::string>> entries;    // (term, code)
  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int lineno = static_cast<int>(li) + 1;
    const std::string& line = lines[li];
    if (is_blank(line) || line[0] == '#') continue;

    // Prefer TAB so terms may contain spaces; otherwise split at the last
    // whitespace run.
    std::string term, code;
    auto tab = line.find('\t');
    if (tab != std::string::npos) {
      term = line.substr(0, tab);
      code = line.substr(tab + 1);
    } else {
      auto ws = line.find_last_of(" \t");
      if (ws == std::string::npos)
        throw error(errc::syntax_error, "expected 'term<TAB>code'", lineno);
      term = line.substr(0, ws);
      code = line.substr(ws + 1);
    }
    while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back())))
      term.pop_back();
    if (term.empty())
      throw error(errc::syntax_error, "empty term", lineno);
    if (!std::regex_match(code, code_re))
      throw error(errc::syntax_error, "bad tree number '" + code + "'", lineno);
    auto [it, inserted] = owner_of_code.emplace(code, term);
    if (!inserted)
      throw error(errc::duplicate_code,
                  "code '" + code + "' already owned by '" + it->second + "'", lineno);
    entries.emplace_back(term, code);
  }

  if (entries.empty()) throw error(errc::no_root, "no tree-number lines");

  std::vector<Concept> concepts;
  std::unordered_set<std::string> seen;
  Concept root;
  root.id = "mesh_root";
  concepts.push_back(std::move(root));
  seen.insert("mesh_root");
  for (const auto& [term, _] : entries)
    if (seen.insert(term).second) {
      Concept c;
      c.id = term;
      concepts.push_back(std::move(c));
    }

  std::vector<std::pair<std::string, std::string>> isa;
  for (const auto& [term, code] : entries) {
    auto dot = code.rfind('.');
    if (dot == std::string::npos) {
      isa.emplace_back(term, "mesh_root");
    } else {
      const std::string prefix = code.substr(0, dot);
      auto it = owner_of_code.find(prefix);
      if (it == owner_of_code.end())
        throw error(errc::missing_parent_code,
                    "no term owns prefix '" + prefix + "' of code '" + code + "'");
      isa.emplace_back(term, it->second);
    }
  }

  return build_taxonomy(std::move(concepts), std::move(isa));
}

CorpusCounts parse_corpus_counts(std::string_view text, const Taxonomy& t) {
  CorpusCounts out;
  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int lineno = static_cast<int>(li) + 1;
    const std::string& line = lines[li];
    if (is_blank(line) || line[0] == '#') continue;
    auto tokens = tokenize(line, lineno);
    if (tokens.size() != 2)
      throw error(errc::syntax_error, "expected 'concept_id<TAB>count'", lineno);
    if (!t.contains(tokens[0]))
      throw error(errc::unknown_concept, "no concept '" + tokens[0] + "'", lineno);
    double v = parse_number(tokens[1], lineno);
    long long count = static_cast<long long>(v);
    if (static_cast<double>(count) != v)
      throw error(errc::syntax_error, "count must be an integer", lineno);
    if (count < 0)
      throw error(errc::negative_count, "negative count for '" + tokens[0] + "'", lineno);
    out.counts[tokens[0]] += count;
  }
  return out;
}

BenchmarkDataset parse_pair_dataset(std::string_view text, std::string_view name) {
  BenchmarkDataset ds;
  ds.name = std::string(name);
  bool have_scale = false;

  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int lineno = static_cast<int>(li) + 1;
    const std::string& line = lines[li];
    if (is_blank(line)) continue;
    if (line[0] == '#') {
      auto tokens = tokenize(line, lineno);
      if (tokens[0] == "#scale") {
        if (have_scale)
          throw error(errc::syntax_error, "duplicate #scale header", lineno);
        if (tokens.size() != 3)
          throw error(errc::syntax_error, "#scale needs min and max", lineno);
        ds.scale_min = parse_number(tokens[1], lineno);
        ds.scale_max = parse_number(tokens[2], lineno);
        if (!(ds.scale_min < ds.scale_max))
          throw error(errc::syntax_error, "scale min must be below max", lineno);
        have_scale = true;
      }
      continue;
    }
    if (!have_scale)
      throw error(errc::syntax_error, "data line before #scale header", lineno);
    auto tokens = tokenize(line, lineno);
    if (tokens.size() != 3)
      throw error(errc::syntax_error, "expected 'word1<TAB>word2<TAB>rating'", lineno);
    BenchmarkDataset::Pair p;
    p.word1 = tokens[0];
    p.word2 = tokens[1];
    p.rating = parse_number(tokens[2], lineno);
    if (p.rating < ds.scale_min || p.rating > ds.scale_max)
      throw error(errc::rating_out_of_scale,
                  "rating " + tokens[2] + " outside [" + std::to_string(ds.scale_min) +
                      ", " + std::to_string(ds.scale_max) + "]",
                  lineno);
    ds.pairs.push_back(std::move(p));
  }

  if (ds.pairs.size() < 2)
    throw error(errc::too_few_pairs,
                "correlation needs at least 2 pairs, got " + std::to_string(ds.pairs.size()));
  return ds;
}

}  // namespace semsim
