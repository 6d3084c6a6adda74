#pragma once

#include <string>
#include <vector>

#include "lieposet/poset.hpp"

namespace lieposet {

// One interior element's contribution to the nilpotent index formula.
struct MinTerm {
  int p = 0;
  int d = 0;
  int u = 0;
  int min_du() const { return d < u ? d : u; }
};

struct IndexReport {
  int index = 0;
  std::string formula_used;

  // nilpotent breakdown: index = rel_count - 2 * sum(min terms)
  int rel_count = 0;
  std::vector<MinTerm> min_terms;

  // solvable breakdown: index = rel_e - size + 2*components + ud_sum
  int rel_e = 0;
  int size = 0;
  int components = 0;
  int ud_sum = 0;
};

std::string report_to_json(const IndexReport& report);

// |Rel(P)| - 2 * sum over interior elements of min(D, U). Valid at every
// height; degenerates to |Rel_E(P)| at height <= 1.
IndexReport nilpotent_index(const Poset& poset);

// |Rel_E(P)|; the nilpotent index never drops below this.
int lower_bound(const Poset& poset);

// Solvable index for height <= 2:
// |Rel_E| - |P| + 2*(Hasse components) + sum of UD(p) over interior p, where
// UD(p) = |U(p) - D(p)| when they differ and 2 otherwise.
// Throws HeightTooLarge above height 2.
IndexReport solvable_index_h2(const Poset& poset);

}  // namespace lieposet
