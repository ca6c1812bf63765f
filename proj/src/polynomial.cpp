#include "lietensor/polynomial.hpp"

#include <algorithm>

#include "lietensor/error.hpp"

namespace lietensor {

const Rational* ParameterAssignment::find(const std::string& name) const {
  auto it = values.find(name);
  return it == values.end() ? nullptr : &it->second;
}

std::string ParameterAssignment::str() const {
  std::string out;
  for (const auto& [name, value] : values) {
    if (!out.empty()) out += ", ";
    out += name + "=" + value.str();
  }
  return out;
}

// --- Monomial -------------------------------------------------------------

Monomial::Monomial(const std::string& variable, unsigned exponent) {
  if (exponent > 0) {
    exps_.emplace(variable, exponent);
    degree_ = exponent;
  }
}

unsigned Monomial::exponent(const std::string& variable) const {
  auto it = exps_.find(variable);
  return it == exps_.end() ? 0 : it->second;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out = *this;
  for (const auto& [v, e] : o.exps_) out.exps_[v] += e;
  out.degree_ = degree_ + o.degree_;
  return out;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  return std::all_of(exps_.begin(), exps_.end(), [&](const auto& ve) { return o.exponent(ve.first) >= ve.second; });
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial out = o;
  for (const auto& [v, e] : exps_) {
    auto it = out.exps_.find(v);
    it->second -= e;
    if (it->second == 0) out.exps_.erase(it);
  }
  out.degree_ = o.degree_ - degree_;
  return out;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial out;
  for (const auto& [v, e] : exps_) {
    const unsigned m = std::min(e, o.exponent(v));
    if (m > 0) {
      out.exps_.emplace(v, m);
      out.degree_ += m;
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  auto i = a.exps_.begin();
  auto j = b.exps_.begin();
  while (i != a.exps_.end() && j != b.exps_.end()) {
    // The side holding the alphabetically earlier variable has a positive exponent the other lacks.
    if (i->first != j->first) return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
    if (i->second != j->second) return i->second <=> j->second;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::str() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : exps_) {
    if (!out.empty()) out += '*';
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// --- Polynomial -----------------------------------------------------------

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial(), constant);
}

Polynomial Polynomial::variable(const std::string& name) { return term(Rational(1), Monomial(name)); }

Polynomial Polynomial::term(const Rational& coefficient, const Monomial& monomial) {
  Polynomial p;
  if (!coefficient.is_zero()) p.terms_.emplace(monomial, coefficient);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

std::set<std::string> Polynomial::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exponents()) out.insert(v);
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor.is_zero()) return {};
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c *= factor;
  return out;
}

Polynomial Polynomial::times(const Monomial& m) const {
  Polynomial out;
  for (const auto& [t, c] : terms_) out.terms_.emplace(t * m, c);
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  Polynomial remainder = *this;
  Polynomial quotient;
  const Monomial& lead = divisor.leading_monomial();
  const Rational& lead_coef = divisor.leading_coefficient();
  // If divisor | p then LT(p) = LT(q)·LT(divisor), so a non-divisible leading term ends the search.
  while (!remainder.is_zero()) {
    const Monomial& top = remainder.leading_monomial();
    if (!lead.divides(top)) return std::nullopt;
    const Polynomial step = term(remainder.leading_coefficient() / lead_coef, lead.quotient_of(top));
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial out = terms_.begin()->first;
  for (const auto& [m, c] : terms_) out = out.gcd(m);
  return out;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return Rational(1);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  return Rational(num_gcd, den_lcm);
}

Rational Polynomial::evaluate(const ParameterAssignment& at) const {
  Rational sum;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (const auto& [v, e] : m.exponents()) {
      const Rational* x = at.find(v);
      if (!x) throw EvaluationError(EvaluationError::Kind::MissingParameter, "no value for parameter '" + v + "'");
      value *= pow(*x, e);
    }
    sum += value;
  }
  return sum;
}

Polynomial Polynomial::substitute(const std::string& name, const Polynomial& value) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(name);
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    Monomial rest;
    for (const auto& [v, k] : m.exponents())
      if (v != name) rest = rest * Monomial(v, k);
    out += pow(value, e).times(rest).scaled(c);
  }
  return out;
}

Polynomial Polynomial::substitute(const ParameterAssignment& at) const {
  Polynomial out = *this;
  for (const auto& [name, value] : at.values) out = out.substitute(name, Polynomial(value));
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational magnitude = c.abs();
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      out += magnitude.str();
    } else if (magnitude.is_one()) {
      // "-a^2" would read as (-a)^2 under the expression grammar.
      if (first && negative && m.exponents().begin()->second > 1) out += "1*";
      out += m.str();
    } else {
      out += magnitude.str() + "*" + m.str();
    }
    first = false;
  }
  return out;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result(1);
  Polynomial square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  for (; i != a.terms().end() && j != b.terms().end(); ++i, ++j) {
    if (i->first != j->first) return i->first < j->first;
    if (i->second != j->second) return i->second < j->second;
  }
  return i == a.terms().end() && j != b.terms().end();
}

}  // namespace lietensor
