#include "lieposet/formulas.hpp"

#include <cstdlib>

#include <json.hpp>

namespace lieposet {

std::string report_to_json(const IndexReport& report) {
  nlohmann::json j;
  j["index"] = report.index;
  j["formula"] = report.formula_used;
  nlohmann::json terms;
  if (report.formula_used.rfind("nilpotent", 0) == 0) {
    terms["rel_count"] = report.rel_count;
    terms["min_terms"] = nlohmann::json::array();
    for (auto& t : report.min_terms)
      terms["min_terms"].push_back(
          {{"p", t.p}, {"d", t.d}, {"u", t.u}, {"min", t.min_du()}});
  } else {
    terms["rel_e"] = report.rel_e;
    terms["size"] = report.size;
    terms["components"] = report.components;
    terms["ud_sum"] = report.ud_sum;
  }
  j["terms"] = terms;
  return j.dump();
}

IndexReport nilpotent_index(const Poset& poset) {
  PosetStats s = stats(poset);
  IndexReport report;
  report.rel_count = s.rel_count;
  int sum = 0;
  for (int p = 1; p <= poset.size(); ++p) {
    if (is_extremal(poset, p)) continue;
    UpDownProfile prof = up_down(poset, p);
    report.min_terms.push_back({p, prof.d, prof.u});
    sum += report.min_terms.back().min_du();
  }
  report.index = s.rel_count - 2 * sum;
  report.formula_used = s.height <= 1   ? "nilpotent/height-le1"
                        : s.height == 2 ? "nilpotent/height-2"
                                        : "nilpotent/general";
  return report;
}

int lower_bound(const Poset& poset) {
  return static_cast<int>(stats(poset).rel_e.size());
}

IndexReport solvable_index_h2(const Poset& poset) {
  PosetStats s = stats(poset);
  if (s.height > 2)
    throw HeightTooLarge("solvable formula requires height <= 2, got " +
                         std::to_string(s.height));
  IndexReport report;
  report.formula_used = "solvable/height-le2";
  report.rel_e = static_cast<int>(s.rel_e.size());
  report.size = poset.size();
  report.components = s.components;
  for (int p = 1; p <= poset.size(); ++p) {
    if (is_extremal(poset, p)) continue;
    UpDownProfile prof = up_down(poset, p);
    report.ud_sum += prof.u != prof.d ? std::abs(prof.u - prof.d) : 2;
  }
  report.index =
      report.rel_e - report.size + 2 * report.components + report.ud_sum;
  return report;
}

}  // namespace lieposet
