#include "lieposet/rank.hpp"

#include <map>
#include <random>
#include <vector>

#include "lieposet/polynomial.hpp"

namespace lieposet {

namespace {

// Collect every basis symbol appearing in entries (not only the labels:
// hand-built matrices may reference symbols outside their label list).
std::map<BasisElement, int> symbol_ids(const SymbolicMatrix& m) {
  std::map<BasisElement, int> ids;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      for (auto& [e, c] : m.entry(i, j).terms()) ids.emplace(e, 0);
  int next = 0;
  for (auto& [e, id] : ids) id = next++;
  return ids;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % kRankFieldPrime);
}

int numeric_rank_mod_p(std::vector<std::vector<std::uint64_t>> a) {
  const int n = static_cast<int>(a.size());
  int rank = 0;
  for (int col = 0, row = 0; col < n && row < n; ++col) {
    int pivot = -1;
    for (int i = row; i < n; ++i)
      if (a[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[row], a[pivot]);
    // Fermat inverse: p is prime.
    std::uint64_t inv = 1, base = a[row][col];
    for (std::uint64_t e = kRankFieldPrime - 2; e; e >>= 1) {
      if (e & 1) inv = mulmod(inv, base);
      base = mulmod(base, base);
    }
    for (int i = row + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      std::uint64_t f = mulmod(a[i][col], inv);
      for (int j = col; j < n; ++j) {
        std::uint64_t sub = mulmod(f, a[row][j]);
        a[i][j] = (a[i][j] + kRankFieldPrime - sub) % kRankFieldPrime;
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace

RankResult exact_rank(const SymbolicMatrix& m) {
  auto ids = symbol_ids(m);
  const int n = m.dim();
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& [e, c] : m.entry(i, j).terms())
        a[i][j] = a[i][j] + Polynomial(c) * Polynomial::variable(ids.at(e));

  // One-step fraction-free (Bareiss) elimination with row and column
  // pivoting; every division is exact.
  int rank = 0;
  Polynomial prev(1);
  for (int k = 0; k < n; ++k) {
    int pr = -1, pc = -1;
    for (int i = k; i < n && pr < 0; ++i)
      for (int j = k; j < n; ++j)
        if (!a[i][j].is_zero()) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    std::swap(a[k], a[pr]);
    if (pc != k)
      for (int i = 0; i < n; ++i) std::swap(a[i][k], a[i][pc]);
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] =
            (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divided_by(prev);
      a[i][k] = Polynomial();
    }
    prev = a[k][k];
    ++rank;
  }
  RankResult r;
  r.rank = rank;
  r.method = RankMethod::exact;
  return r;
}

RankResult randomized_rank(const SymbolicMatrix& m, int trials,
                           std::uint64_t seed) {
  auto ids = symbol_ids(m);
  const int n = m.dim();
  RankResult r;
  r.method = RankMethod::randomized;
  r.trials = trials;
  std::uniform_int_distribution<std::uint64_t> dist(0, kRankFieldPrime - 1);
  for (int t = 0; t < trials; ++t) {
    // Each trial draws its substitution stream from (seed, trial index).
    std::seed_seq sq{seed, static_cast<std::uint64_t>(t)};
    std::mt19937_64 rng(sq);
    std::vector<std::uint64_t> value(ids.size());
    for (auto& v : value) v = dist(rng);
    std::vector<std::vector<std::uint64_t>> a(
        n, std::vector<std::uint64_t>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (auto& [e, c] : m.entry(i, j).terms()) {
          std::uint64_t cv = c >= 0 ? c % kRankFieldPrime
                                    : kRankFieldPrime - (-c) % kRankFieldPrime;
          a[i][j] = (a[i][j] + mulmod(cv, value[ids.at(e)])) % kRankFieldPrime;
        }
    r.rank = std::max(r.rank, numeric_rank_mod_p(std::move(a)));
  }
  double per_trial = static_cast<double>(n) / static_cast<double>(kRankFieldPrime);
  r.failure_bound = 1;
  for (int t = 0; t < trials; ++t) r.failure_bound *= per_trial;
  return r;
}

RankResult matrix_rank(const SymbolicMatrix& m, RankMethod method, int trials,
                       std::uint64_t seed) {
  return method == RankMethod::exact ? exact_rank(m)
                                     : randomized_rank(m, trials, seed);
}

int index_via_rank(const Poset& poset, Variant variant, RankMethod method,
                   int trials, std::uint64_t seed) {
  SymbolicMatrix m = commutator_matrix(poset, variant);
  return m.dim() - matrix_rank(m, method, trials, seed).rank;
}

}  // namespace lieposet
