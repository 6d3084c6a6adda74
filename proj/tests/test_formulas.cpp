#include <doctest.h>

#include <json.hpp>

#include "lieposet/formulas.hpp"
#include "lieposet/rank.hpp"
#include "lieposet/verify.hpp"
#include "test_helpers.hpp"

using namespace lieposet;
using namespace lieposet::testing;

TEST_CASE("nilpotent index of the running example") {
  IndexReport r = nilpotent_index(example21());
  CHECK(r.index == 7);  // 11 - 2*min(2,3)
  CHECK(r.rel_count == 11);
  REQUIRE(r.min_terms.size() == 1);
  CHECK(r.min_terms[0].p == 3);
  CHECK(r.min_terms[0].d == 2);
  CHECK(r.min_terms[0].u == 3);
  CHECK(r.formula_used == "nilpotent/height-2");
}

TEST_CASE("nilpotent index, antichain and height three") {
  CHECK(nilpotent_index(antichain(5)).index == 0);
  IndexReport r = nilpotent_index(height3_poset());
  CHECK(r.index == 5);  // 15 - 2*(2+1+2)
  CHECK(r.formula_used == "nilpotent/general");
  CHECK(r.index == index_via_rank(height3_poset(), Variant::nilpotent));
}

TEST_CASE("lower bound") {
  CHECK(lower_bound(example21()) == 6);
  CHECK(lower_bound(antichain(4)) == 0);
  CHECK(lower_bound(chain(3)) == 1);
}

TEST_CASE("solvable index at height <= 2") {
  IndexReport r = solvable_index_h2(example21());
  CHECK(r.index == 3);  // 6 - 6 + 2*1 + 1
  CHECK(r.rel_e == 6);
  CHECK(r.components == 1);
  CHECK(r.ud_sum == 1);

  IndexReport one = solvable_index_h2(Poset::from_relations(1, {}));
  CHECK(one.index == 1);  // 0 - 1 + 2 + 0
  CHECK(one.index ==
        index_via_rank(Poset::from_relations(1, {}), Variant::solvable));

  Poset disjoint = Poset::from_relations(4, {{1, 3}, {2, 4}});
  IndexReport two = solvable_index_h2(disjoint);
  CHECK(two.index == 2);  // 2 - 4 + 2*2 + 0
  CHECK(two.index == index_via_rank(disjoint, Variant::solvable));

  CHECK_THROWS_AS(solvable_index_h2(height3_poset()), HeightTooLarge);
}

TEST_CASE("formula equals oracle exhaustively at small n") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n))
      CHECK(nilpotent_index(p).index ==
            index_via_rank(p, Variant::nilpotent, RankMethod::randomized));
}

TEST_CASE("formula equals oracle on random larger posets") {
  std::mt19937 rng(47);
  for (int k = 0; k < 40; ++k) {
    Poset p = random_poset(rng, 6 + k % 3, 0.35);
    CHECK(nilpotent_index(p).index ==
          index_via_rank(p, Variant::nilpotent, RankMethod::randomized));
  }
}

TEST_CASE("parity, bound, and positivity of the nilpotent formula") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      IndexReport r = nilpotent_index(p);
      CHECK((r.index - p.rel_count()) % 2 == 0);
      CHECK(r.index >= lower_bound(p));
      if (height(p) <= 1) CHECK(r.index == lower_bound(p));
      if (p.rel_count() > 0) CHECK(r.index >= 1);
      // recorded terms recompose to the index
      int sum = 0;
      for (auto& t : r.min_terms) sum += t.min_du();
      CHECK(r.index == r.rel_count - 2 * sum);
    }
}

TEST_CASE("solvable formula equals oracle on all height <= 2 posets, n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      if (height(p) > 2) continue;
      CHECK(solvable_index_h2(p).index ==
            index_via_rank(p, Variant::solvable, RankMethod::randomized));
    }
}

TEST_CASE("index report serialization") {
  auto nil = nlohmann::json::parse(report_to_json(nilpotent_index(example21())));
  CHECK(nil["index"] == 7);
  CHECK(nil["terms"]["rel_count"] == 11);
  CHECK(nil["terms"]["min_terms"].size() == 1);
  auto sol = nlohmann::json::parse(report_to_json(solvable_index_h2(example21())));
  CHECK(sol["index"] == 3);
  CHECK(sol["terms"]["components"] == 1);
}
