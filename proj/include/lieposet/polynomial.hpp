#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

namespace lieposet {

// Power product over integer-indexed variables, stored as sorted
// (variable, exponent) pairs with positive exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(int v) { return Monomial({{v, 1}}); }

  bool is_one() const { return factors_.empty(); }
  const std::vector<std::pair<int, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& other) const;

  bool divides(const Monomial& other) const;
  Monomial divided_by(const Monomial& other) const;  // requires divisibility

  // Lex order on exponent vectors; a total term order compatible with
  // multiplication, so leading terms multiply without cancellation.
  bool lex_less(const Monomial& other) const;
  bool operator==(const Monomial&) const = default;

 private:
  explicit Monomial(std::vector<std::pair<int, int>> f)
      : factors_(std::move(f)) {}
  std::vector<std::pair<int, int>> factors_;
};

struct MonomialLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return b.lex_less(a);
  }
};

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients; terms kept leading-first.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long long c);  // NOLINT: constant polynomial
  static Polynomial variable(int v);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, mpz_class, MonomialLexGreater>& terms() const {
    return terms_;
  }

  void add_term(const Monomial& m, const mpz_class& c);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;

  // Exact quotient; aborts via assert-style check if division is not exact.
  Polynomial divided_by(const Polynomial& divisor) const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::map<Monomial, mpz_class, MonomialLexGreater> terms_;
};

}  // namespace lieposet
