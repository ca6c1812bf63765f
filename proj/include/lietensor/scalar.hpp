#pragma once

#include <set>
#include <string>

#include "lietensor/polynomial.hpp"

namespace lietensor {

/// Rational function num/den in named parameters.
///
/// The denominator is kept primitive over the integers with a positive leading
/// coefficient; no polynomial GCD is taken, so two equal values may be stored
/// differently. Equality is decided by cross-multiplication.
class ScalarExpr {
 public:
  ScalarExpr() = default;
  ScalarExpr(long constant) : num_(constant) {}  // NOLINT(google-explicit-constructor)
  ScalarExpr(const Rational& constant) : num_(constant) {}  // NOLINT(google-explicit-constructor)
  ScalarExpr(Polynomial num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when `den` is the zero polynomial.
  ScalarExpr(Polynomial num, Polynomial den);

  static ScalarExpr variable(const std::string& name) { return ScalarExpr(Polynomial::variable(name)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  std::set<std::string> variables() const;

  ScalarExpr operator-() const;
  ScalarExpr& operator+=(const ScalarExpr& o);
  ScalarExpr& operator-=(const ScalarExpr& o);
  ScalarExpr& operator*=(const ScalarExpr& o);
  /// Throws DivisionByZero for a zero divisor.
  ScalarExpr& operator/=(const ScalarExpr& o);
  friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b) { return a += b; }
  friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b) { return a -= b; }
  friend ScalarExpr operator*(ScalarExpr a, const ScalarExpr& b) { return a *= b; }
  friend ScalarExpr operator/(ScalarExpr a, const ScalarExpr& b) { return a /= b; }

  /// Same rational function: n1·d2 − n2·d1 is the zero polynomial.
  friend bool operator==(const ScalarExpr& a, const ScalarExpr& b);

  /// Exact value; EvaluationError on a missing parameter or a vanishing denominator.
  Rational evaluate(const ParameterAssignment& at) const;
  ScalarExpr substitute(const std::string& name, const ScalarExpr& value) const;
  ScalarExpr substitute(const ParameterAssignment& at) const;

  /// Canonical polynomial text, or "(num)/(den)" for a proper rational function.
  std::string str() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_{1};
};

ScalarExpr pow(const ScalarExpr& base, unsigned exponent);

}  // namespace lietensor
