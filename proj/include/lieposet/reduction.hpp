#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieposet/poset.hpp"

namespace lieposet {

// One surgery step P -> P1. The surgery removes relations at one end of a
// middle section and grafts on fresh minimal/maximal elements so that the
// commutator-matrix rank is unchanged while the middle-section count drops.
struct ReductionStep {
  std::vector<int> chain;  // middle section used, labels in `before`
  int surgery_case = 0;    // 1: at the top of the chain, 2: at the bottom

  // Synthetic display names for fresh elements ("5_3", "5'") -> labels in
  // `after`.
  std::map<std::string, int> new_elements;

  // relabel[p] = label in `after` of element p of `before`; index 0 unused.
  std::vector<int> relabel;

  Poset before;
  Poset after;
};

std::string step_to_json(const ReductionStep& step);
std::string trace_to_json(const std::vector<ReductionStep>& trace);

// One surgery at the lexicographically smallest middle section. Case 1 when
// the chain's top element has at least as many minimal predecessors as
// maximal successors, case 2 otherwise (dual surgery at the bottom element).
// Output is transitively closed and renumbered to restore natural labeling.
// Throws HeightTooSmall below height 3.
ReductionStep reduce_once(const Poset& poset);

// Iterate reduce_once until height <= 2. Height <= 2 inputs come back
// unchanged with an empty trace.
std::pair<Poset, std::vector<ReductionStep>> reduce_to_height2(
    const Poset& poset);

}  // namespace lieposet
