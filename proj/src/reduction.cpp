#include "lieposet/reduction.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace lieposet {

namespace {

// Kahn numbering over temp ids; survivors keep their relative order via
// old-label priority, fresh elements follow in creation order.
std::vector<int> natural_renumbering(
    int count, const std::set<std::pair<int, int>>& rels,
    const std::vector<int>& priority) {
  std::vector<int> indeg(count, 0);
  for (auto& [a, b] : rels) ++indeg[b];
  std::vector<int> label(count, 0);
  std::vector<bool> done(count, false);
  for (int next = 1; next <= count; ++next) {
    int pick = -1;
    for (int v = 0; v < count; ++v)
      if (!done[v] && indeg[v] == 0 &&
          (pick < 0 || priority[v] < priority[pick]))
        pick = v;
    label[pick] = next;
    done[pick] = true;
    for (auto& [a, b] : rels)
      if (a == pick) --indeg[b];
  }
  return label;
}

}  // namespace

ReductionStep reduce_once(const Poset& poset) {
  const int h = height(poset);
  if (h < 3)
    throw HeightTooSmall("reduction requires height >= 3, got " +
                         std::to_string(h));
  ReductionStep step;
  step.before = poset;
  step.chain = *middle_sections(poset).begin();
  const int bottom = step.chain.front();
  const int top = step.chain.back();
  UpDownProfile top_prof = up_down(poset, top);
  step.surgery_case = top_prof.d_e >= top_prof.u_e ? 1 : 2;

  const int n = poset.size();
  // Temp ids: 0..n-1 for the survivors, fresh elements appended.
  std::set<std::pair<int, int>> rels;
  for (auto [i, j] : poset.relations()) rels.emplace(i - 1, j - 1);
  int count = n;
  std::vector<std::string> fresh_names;

  if (step.surgery_case == 1) {
    for (int q = 1; q <= n; ++q) {
      if (!poset.less(q, top) || is_extremal(poset, q)) continue;
      rels.erase({q - 1, top - 1});
      int f = count++;  // fresh minimal element below top
      rels.emplace(f, top - 1);
      fresh_names.push_back(std::to_string(top) + "_" + std::to_string(q));
    }
    int tp = count++;  // fresh maximal element above every old predecessor
    fresh_names.push_back(std::to_string(top) + "'");
    for (int q = 1; q <= n; ++q)
      if (poset.less(q, top)) rels.emplace(q - 1, tp);
  } else {
    for (int q = 1; q <= n; ++q) {
      if (!poset.less(bottom, q) || is_extremal(poset, q)) continue;
      rels.erase({bottom - 1, q - 1});
      int f = count++;  // fresh maximal element above bottom
      rels.emplace(bottom - 1, f);
      fresh_names.push_back(std::to_string(q) + "^" + std::to_string(bottom));
    }
    int bp = count++;  // fresh minimal element below every old successor
    fresh_names.push_back(std::to_string(bottom) + "'");
    for (int q = 1; q <= n; ++q)
      if (poset.less(bottom, q)) rels.emplace(bp, q - 1);
  }

  // Re-close: fresh elements inherit relations through their attachment.
  for (int k = 0; k < count; ++k)
    for (int i = 0; i < count; ++i)
      if (rels.count({i, k}))
        for (int j = 0; j < count; ++j)
          if (rels.count({k, j})) rels.emplace(i, j);

  std::vector<int> priority(count);
  for (int v = 0; v < n; ++v) priority[v] = v + 1;
  for (int v = n; v < count; ++v) priority[v] = v + 1;
  std::vector<int> label = natural_renumbering(count, rels, priority);

  step.relabel.assign(n + 1, 0);
  for (int p = 1; p <= n; ++p) step.relabel[p] = label[p - 1];
  for (int v = n; v < count; ++v)
    step.new_elements[fresh_names[v - n]] = label[v];

  std::vector<Relation> out;
  for (auto& [a, b] : rels) out.emplace_back(label[a], label[b]);
  step.after = Poset::from_relations(count, out);
  return step;
}

std::pair<Poset, std::vector<ReductionStep>> reduce_to_height2(
    const Poset& poset) {
  Poset current = poset;
  std::vector<ReductionStep> trace;
  while (height(current) >= 3) {
    trace.push_back(reduce_once(current));
    current = trace.back().after;
  }
  return {current, trace};
}

std::string step_to_json(const ReductionStep& step) {
  nlohmann::json j;
  j["case"] = step.surgery_case;
  j["chain"] = step.chain;
  j["new_elements"] = step.new_elements;
  nlohmann::json relabel = nlohmann::json::object();
  for (int p = 1; p < static_cast<int>(step.relabel.size()); ++p)
    relabel[std::to_string(p)] = step.relabel[p];
  j["relabel"] = relabel;
  j["before"] = nlohmann::json::parse(poset_to_json(step.before));
  j["after"] = nlohmann::json::parse(poset_to_json(step.after));
  return j.dump();
}

std::string trace_to_json(const std::vector<ReductionStep>& trace) {
  nlohmann::json j = nlohmann::json::array();
  for (auto& step : trace) j.push_back(nlohmann::json::parse(step_to_json(step)));
  return j.dump();
}

}  // namespace lieposet
