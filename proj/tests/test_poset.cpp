#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "lieposet/poset.hpp"
#include "lieposet/verify.hpp"
#include "test_helpers.hpp"

using namespace lieposet;
using namespace lieposet::testing;

TEST_CASE("transitive closure of generators") {
  Poset p = example21();
  CHECK(p.rel_count() == 11);
  // closure adds the minimal-to-maximal pairs
  for (auto [i, j] : {Relation{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}})
    CHECK(p.less(i, j));
  CHECK_FALSE(p.less(1, 2));
  CHECK_FALSE(p.less(4, 5));
}

TEST_CASE("antichain has no relations") {
  Poset p = antichain(3);
  CHECK(p.rel_count() == 0);
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(Poset::from_relations(3, {{3, 1}}), NaturalityViolation);
  CHECK_THROWS_AS(Poset::from_relations(3, {{1, 1}}), NaturalityViolation);
  CHECK_THROWS_AS(Poset::from_relations(3, {{1, 4}}), OutOfRange);
  CHECK_THROWS_AS(Poset::from_relations(3, {{0, 2}}), OutOfRange);
}

TEST_CASE("stats of the running example") {
  PosetStats s = stats(example21());
  CHECK(s.rel_count == 11);
  CHECK(s.ext == std::vector<int>{1, 2, 4, 5, 6});
  CHECK(s.rel_e.size() == 6);
  CHECK(s.height == 2);
  CHECK(s.covers ==
        std::vector<Relation>{{1, 3}, {2, 3}, {3, 4}, {3, 5}, {3, 6}});
  CHECK(s.components == 1);
}

TEST_CASE("stats of antichain and chain") {
  PosetStats a = stats(antichain(3));
  CHECK(a.rel_count == 0);
  CHECK(a.ext == std::vector<int>{1, 2, 3});
  CHECK(a.rel_e.empty());
  CHECK(a.height == 0);
  CHECK(a.components == 3);

  PosetStats c = stats(chain(3));
  CHECK(c.rel_count == 3);
  CHECK(c.ext == std::vector<int>{1, 3});
  CHECK(c.rel_e == std::vector<Relation>{{1, 3}});
  CHECK(c.height == 2);
  CHECK(c.components == 1);
}

TEST_CASE("empty and singleton posets have height 0") {
  CHECK(height(Poset::from_relations(0, {})) == 0);
  CHECK(height(Poset::from_relations(1, {})) == 0);
}

TEST_CASE("up/down profiles") {
  UpDownProfile p3 = up_down(example21(), 3);
  CHECK(p3.d == 2);
  CHECK(p3.u == 3);
  CHECK(p3.d_e == 2);
  CHECK(p3.u_e == 3);

  UpDownProfile c2 = up_down(chain(3), 2);
  CHECK(c2.d == 1);
  CHECK(c2.u == 1);
  CHECK(c2.d_e == 1);
  CHECK(c2.u_e == 1);

  UpDownProfile a1 = up_down(antichain(3), 1);
  CHECK(a1.d == 0);
  CHECK(a1.u == 0);

  CHECK_THROWS_AS(up_down(chain(3), 4), OutOfRange);
}

TEST_CASE("middle sections") {
  CHECK(middle_sections(height3_poset()) ==
        std::set<std::vector<int>>{{3, 5}});
  CHECK(middle_sections(example21()) == std::set<std::vector<int>>{{3}});
  CHECK(middle_sections(chain(3)) == std::set<std::vector<int>>{{2}});
  CHECK_THROWS_AS(middle_sections(antichain(3)), HeightTooSmall);
  CHECK_THROWS_AS(middle_sections(Poset::from_relations(2, {{1, 2}})),
                  HeightTooSmall);
}

TEST_CASE("middle sections match brute force on all small posets") {
  for (int n = 2; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      int h = height(p);
      if (h < 2) continue;
      CHECK(middle_sections(p) == middle_sections_bruteforce(p, h));
    }
}

TEST_CASE("hasse DOT output") {
  std::string dot = hasse_dot(example21());
  CHECK(std::count(dot.begin(), dot.end(), '>') == 5);

  std::string two = hasse_dot(antichain(2));
  CHECK(two.find("1;") != std::string::npos);
  CHECK(two.find("2;") != std::string::npos);
  CHECK(two.find("->") == std::string::npos);

  std::string c = hasse_dot(chain(3));
  CHECK(c.find("1 -> 2") != std::string::npos);
  CHECK(c.find("2 -> 3") != std::string::npos);
  CHECK(c.find("1 -> 3") == std::string::npos);  // transitive, not a cover
}

TEST_CASE("closure is idempotent and covers generate") {
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : enumerate_posets(n)) {
      CHECK(Poset::from_relations(n, p.relations()) == p);
      CHECK(Poset::from_relations(n, stats(p).covers) == p);
    }
}

TEST_CASE("extremal statistics invariants") {
  for (const Poset& p : enumerate_posets(5)) {
    PosetStats s = stats(p);
    // rel_e is exactly the extremal-endpoint filter of Rel
    std::vector<Relation> filtered;
    for (auto r : p.relations())
      if (is_extremal(p, r.first) && is_extremal(p, r.second))
        filtered.push_back(r);
    CHECK(s.rel_e == filtered);
    for (int q = 1; q <= p.size(); ++q) {
      UpDownProfile prof = up_down(p, q);
      CHECK(prof.d_e <= prof.d);
      CHECK(prof.u_e <= prof.u);
      if (s.height <= 1) {
        CHECK(prof.d_e == prof.d);
        CHECK(prof.u_e == prof.u);
      }
    }
    if (s.height >= 2)
      for (auto& section : middle_sections(p))
        for (int e : section) CHECK_FALSE(is_extremal(p, e));
  }
}

TEST_CASE("text format round trip") {
  Poset p = example21();
  CHECK(parse_poset_text(poset_to_text(p)) == p);
  Poset q = parse_poset_text("# comment\nn 3\n1 < 2  # inline\n");
  CHECK(q.rel_count() == 1);
  CHECK_THROWS_AS(parse_poset_text("1 < 2\n"), ParseError);
  CHECK_THROWS_AS(parse_poset_text("n 3\nfoo\n"), ParseError);
  CHECK_THROWS_AS(parse_poset_text("n 3\n3 < 1\n"), NaturalityViolation);
}

TEST_CASE("json format round trip") {
  Poset p = example21();
  CHECK(parse_poset_json(poset_to_json(p)) == p);
  CHECK(parse_poset_json("{\"n\": 2, \"relations\": [[1,2]]}").rel_count() ==
        1);
  CHECK_THROWS_AS(parse_poset_json("{\"relations\": []}"), ParseError);
  CHECK_THROWS_AS(parse_poset_json("not json"), ParseError);
}
