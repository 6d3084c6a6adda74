#include "lieposet/verify.hpp"

#include <algorithm>
#include <chrono>

#include <json.hpp>

#include "lieposet/formulas.hpp"
#include "lieposet/reduction.hpp"

namespace lieposet {

void enumerate_posets(int n, const std::function<void(const Poset&)>& visit) {
  if (n < 0) throw OutOfRange("negative element count");
  if (n > kMaxEnumerationSize)
    throw ResourceBound("enumeration capped at n = " +
                        std::to_string(kMaxEnumerationSize));
  // Pairs ordered by span j-i: any two-step path i<j<k uses strictly smaller
  // spans, so by the time (i,k) is decided its transitivity constraint is
  // known. Forced pairs get one branch, free pairs two; every emitted
  // relation set is transitively closed and none is emitted twice.
  std::vector<Relation> pairs;
  for (int span = 1; span < n; ++span)
    for (int i = 1; i + span <= n; ++i) pairs.emplace_back(i, i + span);

  std::vector<std::vector<bool>> in(n + 1, std::vector<bool>(n + 1, false));
  std::vector<Relation> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == pairs.size()) {
      visit(Poset::from_relations(n, chosen));
      return;
    }
    auto [i, j] = pairs[k];
    bool forced = false;
    for (int mid = i + 1; mid < j && !forced; ++mid)
      forced = in[i][mid] && in[mid][j];
    if (!forced) rec(k + 1);  // exclude branch
    in[i][j] = true;
    chosen.emplace_back(i, j);
    rec(k + 1);
    chosen.pop_back();
    in[i][j] = false;
  };
  rec(0);
}

std::vector<Poset> enumerate_posets(int n) {
  std::vector<Poset> out;
  enumerate_posets(n, [&](const Poset& p) { out.push_back(p); });
  return out;
}

std::vector<Poset> enumerate_posets_naive(int n) {
  std::vector<Relation> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  std::vector<Poset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
       ++mask) {
    std::vector<Relation> rels;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) rels.push_back(pairs[k]);
    Poset p = Poset::from_relations(n, rels);
    if (p.relations() == rels) out.push_back(p);  // already closed
  }
  return out;
}

namespace {

bool check_enabled(const SweepOptions& opt, const std::string& name) {
  return opt.checks.empty() ||
         std::find(opt.checks.begin(), opt.checks.end(), name) !=
             opt.checks.end();
}

}  // namespace

SweepReport sweep(int n, const SweepOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  SweepReport report;
  report.n = n;

  auto record = [&](const std::string& check, const Poset& p, long long lhs,
                    long long rhs) {
    ++report.checks_run[check];
    if (lhs != rhs)
      report.mismatches.push_back({check, poset_to_text(p), lhs, rhs});
  };

  long long instance = 0;
  enumerate_posets(n, [&](const Poset& p) {
    ++report.poset_count;
    ++instance;
    IndexReport formula = nilpotent_index(p);
    int h = height(p);

    if (check_enabled(options, "nilpotent-formula")) {
      int oracle = index_via_rank(p, Variant::nilpotent, options.oracle,
                                  options.trials, options.seed);
      record("nilpotent-formula", p, formula.index, oracle);
      if (options.oracle == RankMethod::randomized &&
          options.spot_check_period > 0 &&
          instance % options.spot_check_period == 0) {
        int exact = index_via_rank(p, Variant::nilpotent, RankMethod::exact);
        record("spot-exact", p, exact, oracle);
      }
    }
    if (check_enabled(options, "lower-bound"))
      record("lower-bound", p, formula.index >= lower_bound(p) ? 1 : 0, 1);
    if (check_enabled(options, "positivity"))
      record("positivity", p,
             p.rel_count() == 0 || formula.index >= 1 ? 1 : 0, 1);
    if (check_enabled(options, "height-one-equality") && h <= 1)
      record("height-one-equality", p, formula.index, lower_bound(p));
    if (check_enabled(options, "solvable-formula") && h <= 2) {
      int oracle = index_via_rank(p, Variant::solvable, options.oracle,
                                  options.trials, options.seed);
      record("solvable-formula", p, solvable_index_h2(p).index, oracle);
    }
    if (check_enabled(options, "reduction-rank") && h >= 3) {
      auto [reduced, trace] = reduce_to_height2(p);
      for (auto& step : trace) {
        auto before = commutator_matrix(step.before, Variant::nilpotent);
        auto after = commutator_matrix(step.after, Variant::nilpotent);
        record("reduction-rank", p,
               matrix_rank(before, options.oracle, options.trials,
                           options.seed)
                   .rank,
               matrix_rank(after, options.oracle, options.trials, options.seed)
                   .rank);
      }
    }
  });

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

std::string report_to_json(const SweepReport& report, bool include_timing) {
  nlohmann::json j;
  j["n"] = report.n;
  j["poset_count"] = report.poset_count;
  j["checks_run"] = report.checks_run;
  j["mismatches"] = nlohmann::json::array();
  for (auto& m : report.mismatches)
    j["mismatches"].push_back({{"check", m.check},
                               {"poset", m.poset},
                               {"formula", m.formula_value},
                               {"oracle", m.oracle_value}});
  j["passed"] = report.passed();
  if (include_timing) j["elapsed_seconds"] = report.elapsed_seconds;
  return j.dump(2);
}

}  // namespace lieposet
