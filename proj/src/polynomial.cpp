#include "lieposet/polynomial.hpp"

#include <stdexcept>

namespace lieposet {

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<std::pair<int, int>> out;
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() ||
        (a != factors_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      out.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return Monomial(std::move(out));
}

bool Monomial::divides(const Monomial& other) const {
  auto b = other.factors_.begin();
  for (auto& [v, e] : factors_) {
    while (b != other.factors_.end() && b->first < v) ++b;
    if (b == other.factors_.end() || b->first != v || b->second < e)
      return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  std::vector<std::pair<int, int>> out;
  auto b = other.factors_.begin();
  for (auto& [v, e] : factors_) {
    int sub = 0;
    if (b != other.factors_.end() && b->first == v) sub = (b++)->second;
    if (e - sub < 0) throw std::logic_error("monomial division not exact");
    if (e - sub > 0) out.emplace_back(v, e - sub);
  }
  if (b != other.factors_.end())
    throw std::logic_error("monomial division not exact");
  return Monomial(std::move(out));
}

bool Monomial::lex_less(const Monomial& other) const {
  // Higher exponent on an earlier variable means lex-greater.
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first != b->first) return a->first > b->first;
    if (a->second != b->second) return a->second < b->second;
    ++a;
    ++b;
  }
  return a == factors_.end() && b != other.factors_.end();
}

Polynomial::Polynomial(long long c) {
  if (c != 0) terms_.emplace(Monomial{}, mpz_class(static_cast<long>(c)));
}

Polynomial Polynomial::variable(int v) {
  Polynomial p;
  p.terms_.emplace(Monomial::variable(v), mpz_class(1));
  return p;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else if ((it->second += c) == 0) {
    terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  for (auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  for (auto& [m, c] : other.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::divided_by(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::logic_error("division by zero polynomial");
  Polynomial rem = *this, quot;
  const auto& [dm, dc] = *divisor.terms_.begin();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.begin();
    // Exact division: the leading term of the remainder stays divisible.
    if (!dm.divides(rm) || rc % dc != 0)
      throw std::logic_error("polynomial division not exact");
    Monomial qm = rm.divided_by(dm);
    mpz_class qc = rc / dc;
    quot.add_term(qm, qc);
    Polynomial t;
    t.add_term(qm, qc);
    rem = rem - t * divisor;
  }
  return quot;
}

}  // namespace lieposet
