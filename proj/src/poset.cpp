#include "lieposet/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace lieposet {

std::size_t Poset::idx(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    throw OutOfRange("element label outside 1.." + std::to_string(n_));
  return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

Poset Poset::from_relations(int n, const std::vector<Relation>& generators) {
  if (n < 0) throw OutOfRange("negative element count");
  Poset p;
  p.n_ = n;
  p.lt_.assign(static_cast<std::size_t>(n) * n, false);
  for (auto [i, j] : generators) {
    if (i < 1 || i > n || j < 1 || j > n)
      throw OutOfRange("relation (" + std::to_string(i) + "," +
                       std::to_string(j) + ") outside 1.." + std::to_string(n));
    if (i >= j)
      throw NaturalityViolation("relation (" + std::to_string(i) + "," +
                                std::to_string(j) +
                                ") violates natural labeling (need i < j)");
    p.lt_[p.idx(i, j)] = true;
  }
  // Warshall closure; naturality makes the order acyclic by construction.
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      if (p.lt_[p.idx(i, k)])
        for (int j = 1; j <= n; ++j)
          if (p.lt_[p.idx(k, j)]) p.lt_[p.idx(i, j)] = true;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p.lt_[p.idx(i, j)]) p.rels_.emplace_back(i, j);
  return p;
}

bool is_minimal(const Poset& poset, int p) {
  for (int q = 1; q < p; ++q)
    if (poset.less(q, p)) return false;
  return true;
}

bool is_maximal(const Poset& poset, int p) {
  for (int q = p + 1; q <= poset.size(); ++q)
    if (poset.less(p, q)) return false;
  return true;
}

bool is_extremal(const Poset& poset, int p) {
  return is_minimal(poset, p) || is_maximal(poset, p);
}

int height(const Poset& poset) {
  const int n = poset.size();
  std::vector<int> longest(n + 1, 0);  // longest chain ending at p, edges
  int best = 0;
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q < p; ++q)
      if (poset.less(q, p)) longest[p] = std::max(longest[p], longest[q] + 1);
    best = std::max(best, longest[p]);
  }
  return best;
}

PosetStats stats(const Poset& poset) {
  const int n = poset.size();
  PosetStats s;
  s.rel_count = poset.rel_count();
  s.height = height(poset);

  for (int p = 1; p <= n; ++p)
    if (is_extremal(poset, p)) s.ext.push_back(p);

  for (auto [i, j] : poset.relations())
    if (is_extremal(poset, i) && is_extremal(poset, j))
      s.rel_e.emplace_back(i, j);

  for (auto [i, j] : poset.relations()) {
    bool covered = false;
    for (int k = i + 1; k < j && !covered; ++k)
      covered = poset.less(i, k) && poset.less(k, j);
    if (!covered) s.covers.emplace_back(i, j);
  }

  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (auto [i, j] : poset.relations()) parent[find(i)] = find(j);
  for (int p = 1; p <= n; ++p)
    if (find(p) == p) ++s.components;

  return s;
}

UpDownProfile up_down(const Poset& poset, int p) {
  if (p < 1 || p > poset.size())
    throw OutOfRange("element " + std::to_string(p) + " outside 1.." +
                     std::to_string(poset.size()));
  UpDownProfile prof;
  prof.p = p;
  for (int q = 1; q <= poset.size(); ++q) {
    if (poset.less(q, p)) {
      ++prof.d;
      if (is_minimal(poset, q)) prof.b_lower.push_back(q);
    }
    if (poset.less(p, q)) {
      ++prof.u;
      if (is_maximal(poset, q)) prof.b_upper.push_back(q);
    }
  }
  prof.d_e = static_cast<int>(prof.b_lower.size());
  prof.u_e = static_cast<int>(prof.b_upper.size());
  return prof;
}

std::set<std::vector<int>> middle_sections_at(const Poset& poset, int h) {
  std::set<std::vector<int>> sections;
  if (h < 2) return sections;
  // DFS over chains of cardinality h+1 linked by the strict order;
  // transitivity makes consecutive comparability suffice.
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int last) {
    if (static_cast<int>(chain.size()) == h + 1) {
      sections.emplace(chain.begin() + 1, chain.end() - 1);
      return;
    }
    for (int q = last + 1; q <= poset.size(); ++q)
      if (poset.less(last, q)) {
        chain.push_back(q);
        extend(q);
        chain.pop_back();
      }
  };
  for (int p = 1; p <= poset.size(); ++p) {
    chain.assign(1, p);
    extend(p);
  }
  return sections;
}

std::set<std::vector<int>> middle_sections(const Poset& poset) {
  int h = height(poset);
  if (h < 2)
    throw HeightTooSmall("middle sections require height >= 2, got " +
                         std::to_string(h));
  return middle_sections_at(poset, h);
}

std::string hasse_dot(const Poset& poset) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (int p = 1; p <= poset.size(); ++p) out << "  " << p << ";\n";
  for (auto [i, j] : stats(poset).covers)
    out << "  " << i << " -> " << j << ";\n";
  out << "}\n";
  return out.str();
}

Poset parse_poset_text(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Relation> rels;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "n") {
      if (n >= 0 || !(ls >> n) || n < 0)
        throw ParseError("line " + std::to_string(lineno) +
                         ": bad or duplicate header, expected 'n <count>'");
      continue;
    }
    int i, j;
    std::string op;
    try {
      i = std::stoi(first);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected '<i> < <j>'");
    }
    if (!(ls >> op >> j) || op != "<")
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected '<i> < <j>'");
    if (n < 0)
      throw ParseError("line " + std::to_string(lineno) +
                       ": relation before 'n <count>' header");
    rels.emplace_back(i, j);
  }
  if (n < 0) throw ParseError("missing 'n <count>' header");
  return Poset::from_relations(n, rels);
}

Poset parse_poset_text(const std::string& text) {
  std::istringstream in(text);
  return parse_poset_text(in);
}

std::string poset_to_text(const Poset& poset) {
  std::ostringstream out;
  out << "n " << poset.size() << "\n";
  for (auto [i, j] : poset.relations()) out << i << " < " << j << "\n";
  return out.str();
}

Poset parse_poset_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("JSON poset needs integer field \"n\"");
  std::vector<Relation> rels;
  for (const auto& pair : j.value("relations", nlohmann::json::array())) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("JSON relation must be a pair [i, j]");
    rels.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return Poset::from_relations(j["n"].get<int>(), rels);
}

std::string poset_to_json(const Poset& poset) {
  nlohmann::json j;
  j["n"] = poset.size();
  j["relations"] = nlohmann::json::array();
  for (auto [i, k] : poset.relations()) j["relations"].push_back({i, k});
  return j.dump();
}

}  // namespace lieposet
