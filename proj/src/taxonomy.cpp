#include "semsim/taxonomy.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_map>

namespace semsim {

std::string fold_case(std::string_view word) {
  std::string out(word);
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

namespace {

std::set<std::string> fold_set(const std::set<std::string>& in) {
  std::set<std::string> out;
  for (const auto& w : in) out.insert(fold_case(w));
  return out;
}

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<int> merge_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Taxonomy build_taxonomy(std::vector<Concept> concepts,
                        std::vector<std::pair<std::string, std::string>> isa,
                        std::vector<std::pair<std::string, std::string>> partof) {
  Taxonomy t;
  std::sort(concepts.begin(), concepts.end(),
            [](const Concept& a, const Concept& b) { return a.id < b.id; });
  for (std::size_t i = 0; i + 1 < concepts.size(); ++i)
    if (concepts[i].id == concepts[i + 1].id)
      throw error(errc::duplicate_id, "concept '" + concepts[i].id + "' declared twice");
  for (auto& c : concepts) {
    if (c.id.empty()) throw error(errc::invalid_param, "empty concept id");
    c.synonyms = fold_set(c.synonyms);
    c.synonyms.insert(fold_case(c.id));
    c.gloss_terms = fold_set(c.gloss_terms);
    c.feature_terms = fold_set(c.feature_terms);
  }
  t.concepts_ = std::move(concepts);

  const int n = static_cast<int>(t.concepts_.size());
  std::unordered_map<std::string, int> index;
  index.reserve(t.concepts_.size());
  for (int i = 0; i < n; ++i) index.emplace(t.concepts_[i].id, i);

  auto lookup = [&](const std::string& id, const char* what) {
    auto it = index.find(id);
    if (it == index.end())
      throw error(errc::unknown_endpoint,
                  std::string(what) + " edge references undeclared concept '" + id + "'");
    return it->second;
  };

  t.isa_parents_.assign(n, {});
  t.isa_children_.assign(n, {});
  t.partof_wholes_.assign(n, {});
  t.partof_parts_.assign(n, {});

  for (const auto& [child, parent] : isa) {
    int c = lookup(child, "is-a"), p = lookup(parent, "is-a");
    if (c == p)
      throw error(errc::cycle_detected, "self-loop on '" + child + "'");
    t.isa_parents_[c].push_back(p);
    t.isa_children_[p].push_back(c);
  }
  for (const auto& [part, whole] : partof) {
    int a = lookup(part, "part-of"), b = lookup(whole, "part-of");
    if (a == b)
      throw error(errc::cycle_detected, "part-of self-loop on '" + part + "'");
    t.partof_wholes_[a].push_back(b);
    t.partof_parts_[b].push_back(a);
  }
  for (int i = 0; i < n; ++i) {
    sort_unique(t.isa_parents_[i]);
    sort_unique(t.isa_children_[i]);
    sort_unique(t.partof_wholes_[i]);
    sort_unique(t.partof_parts_[i]);
  }
  for (int i = 0; i < n; ++i) {
    t.isa_edge_count_ += t.isa_parents_[i].size();
    t.partof_edge_count_ += t.partof_wholes_[i].size();
  }

  // Kahn over the is-a relation: detects cycles before root counting so that
  // an all-cycle input reports CycleDetected, not NoRoot.
  {
    std::vector<int> pending(n);
    std::deque<int> ready;
    for (int i = 0; i < n; ++i) {
      pending[i] = static_cast<int>(t.isa_parents_[i].size());
      if (pending[i] == 0) ready.push_back(i);
    }
    int seen = 0;
    while (!ready.empty()) {
      int p = ready.front();
      ready.pop_front();
      ++seen;
      for (int c : t.isa_children_[p])
        if (--pending[c] == 0) ready.push_back(c);
    }
    if (seen != n) throw error(errc::cycle_detected, "is-a relation contains a cycle");
  }

  std::vector<int> roots;
  for (int i = 0; i < n; ++i)
    if (t.isa_parents_[i].empty()) roots.push_back(i);
  if (roots.empty()) throw error(errc::no_root, "taxonomy has no concepts");
  if (roots.size() > 1) {
    std::string msg = "parentless concepts:";
    for (int r : roots) msg += " " + t.concepts_[r].id;
    throw error(errc::multiple_roots, msg);
  }
  t.root_ = roots[0];

  // Depth = min is-a edges from the root; BFS downward.
  t.depth_.assign(n, -1);
  {
    std::deque<int> queue{t.root_};
    t.depth_[t.root_] = 0;
    while (!queue.empty()) {
      int p = queue.front();
      queue.pop_front();
      for (int c : t.isa_children_[p])
        if (t.depth_[c] < 0) {
          t.depth_[c] = t.depth_[p] + 1;
          queue.push_back(c);
        }
    }
  }
  t.deep_max_ = *std::max_element(t.depth_.begin(), t.depth_.end());

  // Ancestor-or-self closure in topological order (parents first).
  t.closure_.assign(n, {});
  {
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> pending(n);
    std::deque<int> ready;
    for (int i = 0; i < n; ++i) {
      pending[i] = static_cast<int>(t.isa_parents_[i].size());
      if (pending[i] == 0) ready.push_back(i);
    }
    while (!ready.empty()) {
      int p = ready.front();
      ready.pop_front();
      order.push_back(p);
      for (int c : t.isa_children_[p])
        if (--pending[c] == 0) ready.push_back(c);
    }
    for (int node : order) {
      std::vector<int> acc{node};
      for (int p : t.isa_parents_[node]) acc = merge_sorted(acc, t.closure_[p]);
      t.closure_[node] = std::move(acc);
    }
  }

  // hyponym_count(a) = #{ c != a : a in closure(c) }.
  t.hyponyms_.assign(n, 0);
  for (int c = 0; c < n; ++c)
    for (int a : t.closure_[c])
      if (a != c) ++t.hyponyms_[a];

  for (int i = 0; i < n; ++i)
    for (const auto& w : t.concepts_[i].synonyms) t.word_index_.emplace_back(w, i);
  std::sort(t.word_index_.begin(), t.word_index_.end());

  return t;
}

int Taxonomy::index_of(const std::string& id) const {
  auto it = std::lower_bound(concepts_.begin(), concepts_.end(), id,
                             [](const Concept& c, const std::string& s) { return c.id < s; });
  if (it == concepts_.end() || it->id != id)
    throw error(errc::unknown_concept, "no concept '" + id + "'");
  return static_cast<int>(it - concepts_.begin());
}

bool Taxonomy::contains(std::string_view id) const {
  std::string key(id);
  auto it = std::lower_bound(concepts_.begin(), concepts_.end(), key,
                             [](const Concept& c, const std::string& s) { return c.id < s; });
  return it != concepts_.end() && it->id == key;
}

const Concept& Taxonomy::at(const std::string& id) const {
  return concepts_[index_of(id)];
}

int Taxonomy::depth(const std::string& id) const { return depth_[index_of(id)]; }

std::set<std::string> Taxonomy::ancestors_or_self(const std::string& id) const {
  std::set<std::string> out;
  for (int a : closure_[index_of(id)]) out.insert(concepts_[a].id);
  return out;
}

std::vector<int> Taxonomy::up_distances(int idx) const {
  std::vector<int> dist(concepts_.size(), -1);
  std::deque<int> queue{idx};
  dist[idx] = 0;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int p : isa_parents_[c])
      if (dist[p] < 0) {
        dist[p] = dist[c] + 1;
        queue.push_back(p);
      }
  }
  return dist;
}

LcsInfo Taxonomy::lcs(const std::string& c1, const std::string& c2) const {
  const int i1 = index_of(c1), i2 = index_of(c2);
  const auto d1 = up_distances(i1), d2 = up_distances(i2);
  // closest common ancestor: fewest is-a links to the two concepts, then the
  // deepest candidate, then the smallest id (iteration is in id order)
  int best = -1;
  for (std::size_t a = 0; a < concepts_.size(); ++a) {
    if (d1[a] < 0 || d2[a] < 0) continue;
    if (best < 0 || d1[a] + d2[a] < d1[best] + d2[best] ||
        (d1[a] + d2[a] == d1[best] + d2[best] && depth_[a] > depth_[best]))
      best = static_cast<int>(a);
  }
  return LcsInfo{concepts_[best].id, depth_[best], d1[best], d2[best]};
}

PathInfo Taxonomy::shortest_path(const std::string& c1, const std::string& c2) const {
  const int i1 = index_of(c1), i2 = index_of(c2);
  const auto d1 = up_distances(i1), d2 = up_distances(i2);
  int best = -1;
  for (std::size_t a = 0; a < concepts_.size(); ++a) {
    if (d1[a] < 0 || d2[a] < 0) continue;
    if (best < 0 || d1[a] + d2[a] < best) best = d1[a] + d2[a];
  }
  PathInfo info;
  info.edge_length = best;
  info.node_length = best + 1;
  info.direction_changes = (d1[i2] >= 0 || d2[i1] >= 0) ? 0 : 1;
  return info;
}

int Taxonomy::hyponym_count(const std::string& id) const {
  return hyponyms_[index_of(id)];
}

std::vector<std::string> Taxonomy::resolve_word(std::string_view word) const {
  const std::string key = fold_case(word);
  std::vector<std::string> out;
  auto it = std::lower_bound(word_index_.begin(), word_index_.end(),
                             std::make_pair(key, 0));
  for (; it != word_index_.end() && it->first == key; ++it)
    out.push_back(concepts_[it->second].id);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
std::vector<std::string> to_ids(const Taxonomy& t, const std::vector<int>& idxs) {
  std::vector<std::string> out;
  out.reserve(idxs.size());
  for (int i : idxs) out.push_back(t.id_of(i));
  return out;
}
}  // namespace

std::vector<std::string> Taxonomy::isa_parents(const std::string& id) const {
  return to_ids(*this, isa_parents_[index_of(id)]);
}
std::vector<std::string> Taxonomy::isa_children(const std::string& id) const {
  return to_ids(*this, isa_children_[index_of(id)]);
}
std::vector<std::string> Taxonomy::partof_wholes(const std::string& id) const {
  return to_ids(*this, partof_wholes_[index_of(id)]);
}
std::vector<std::string> Taxonomy::partof_parts(const std::string& id) const {
  return to_ids(*this, partof_parts_[index_of(id)]);
}

std::vector<std::pair<std::string, std::string>> Taxonomy::isa_edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t c = 0; c < concepts_.size(); ++c)
    for (int p : isa_parents_[c]) out.emplace_back(concepts_[c].id, concepts_[p].id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::string, std::string>> Taxonomy::partof_edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t a = 0; a < concepts_.size(); ++a)
    for (int w : partof_wholes_[a]) out.emplace_back(concepts_[a].id, concepts_[w].id);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace semsim
