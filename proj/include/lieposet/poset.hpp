#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lieposet/errors.hpp"

namespace lieposet {

using Relation = std::pair<int, int>;

// Finite naturally labeled poset on {1..n}: i < j as integers whenever i
// precedes j. Stores the full strict order (transitively closed); immutable
// after construction.
class Poset {
 public:
  Poset() = default;

  // Closes an arbitrary set of strict generators. Throws NaturalityViolation
  // if some pair (i,j) has i >= j, OutOfRange for labels outside 1..n.
  static Poset from_relations(int n, const std::vector<Relation>& generators);

  int size() const { return n_; }

  // i strictly precedes j
  bool less(int i, int j) const { return lt_[idx(i, j)]; }
  bool leq(int i, int j) const { return i == j || less(i, j); }

  // All strict relations, sorted lexicographically.
  const std::vector<Relation>& relations() const { return rels_; }
  int rel_count() const { return static_cast<int>(rels_.size()); }

  bool operator==(const Poset& other) const {
    return n_ == other.n_ && rels_ == other.rels_;
  }

 private:
  std::size_t idx(int i, int j) const;

  int n_ = 0;
  std::vector<bool> lt_;  // n*n strict-order matrix
  std::vector<Relation> rels_;
};

struct PosetStats {
  int rel_count = 0;
  std::vector<int> ext;             // minimal and maximal elements, sorted
  std::vector<Relation> rel_e;      // strict relations within ext
  int height = 0;                   // longest chain cardinality minus one
  std::vector<Relation> covers;     // Hasse-diagram edges
  int components = 0;               // comparability-graph components
};

// D/U counts at one element, with the extremal witness sets.
struct UpDownProfile {
  int p = 0;
  int d = 0;    // |{q : q < p}|
  int u = 0;    // |{q : p < q}|
  int d_e = 0;  // minimal predecessors
  int u_e = 0;  // maximal successors
  std::vector<int> b_lower;  // minimal l with l < p
  std::vector<int> b_upper;  // maximal b with p < b
};

bool is_minimal(const Poset& poset, int p);
bool is_maximal(const Poset& poset, int p);
bool is_extremal(const Poset& poset, int p);

int height(const Poset& poset);
PosetStats stats(const Poset& poset);
UpDownProfile up_down(const Poset& poset, int p);

// Interiors of maximal-length chains: the (h-1)-element chains that extend on
// both ends to a chain of cardinality h+1, where h = height. Throws
// HeightTooSmall below height 2.
std::set<std::vector<int>> middle_sections(const Poset& poset);

// Same, for an explicit height parameter; empty when no chain of cardinality
// h+1 exists. Used to track the middle-section count across reductions.
std::set<std::vector<int>> middle_sections_at(const Poset& poset, int h);

// DOT digraph whose edges are exactly the covering relations.
std::string hasse_dot(const Poset& poset);

// Text format: "n <count>" header, then "<i> < <j>" lines; '#' comments.
Poset parse_poset_text(std::istream& in);
Poset parse_poset_text(const std::string& text);
std::string poset_to_text(const Poset& poset);

// JSON: {"n": 6, "relations": [[1,3],...]}
Poset parse_poset_json(const std::string& text);
std::string poset_to_json(const Poset& poset);

}  // namespace lieposet
