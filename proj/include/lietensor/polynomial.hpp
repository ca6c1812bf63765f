#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lietensor/rational.hpp"

namespace lietensor {

/// Values for named parameters.
struct ParameterAssignment {
  std::map<std::string, Rational> values;

  const Rational* find(const std::string& name) const;
  friend bool operator==(const ParameterAssignment&, const ParameterAssignment&) = default;
  /// "a=1, b=1/2" with names in alphabetical order.
  std::string str() const;
};

/// Power product of named parameters. Zero exponents are never stored.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::string& variable, unsigned exponent = 1);

  const std::map<std::string, unsigned>& exponents() const { return exps_; }
  unsigned degree() const { return degree_; }
  unsigned exponent(const std::string& variable) const;
  bool is_one() const { return exps_.empty(); }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Requires divides(o).
  Monomial quotient_of(const Monomial& o) const;
  /// Componentwise minimum of exponents.
  Monomial gcd(const Monomial& o) const;

  /// Graded lexicographic, variables compared alphabetically (earlier name is larger).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  /// "a^2*b"; "1" for the unit monomial.
  std::string str() const;

 private:
  std::map<std::string, unsigned> exps_;
  unsigned degree_ = 0;
};

/// Sparse multivariate polynomial over the rationals, terms kept in descending graded-lex order.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, std::greater<>>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  static Polynomial variable(const std::string& name);
  static Polynomial term(const Rational& coefficient, const Monomial& monomial);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the unit monomial.
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }
  unsigned total_degree() const;

  /// Requires a nonzero polynomial.
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  std::set<std::string> variables() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& factor) const;
  Polynomial times(const Monomial& m) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Exact quotient if `divisor` divides this polynomial, nullopt otherwise.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
  /// Largest monomial dividing every term (unit monomial for zero).
  Monomial monomial_content() const;
  /// Positive rational c such that this/c has coprime integer coefficients (1 for zero).
  Rational content() const;

  /// Throws EvaluationError on a missing parameter.
  Rational evaluate(const ParameterAssignment& at) const;
  /// Replaces `name` by `value`, expanding.
  Polynomial substitute(const std::string& name, const Polynomial& value) const;
  /// Substitutes every assigned parameter that occurs; the rest stay symbolic.
  Polynomial substitute(const ParameterAssignment& at) const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Ascending total degree, then term-by-term graded-lex comparison.
bool canonical_less(const Polynomial& a, const Polynomial& b);

}  // namespace lietensor
