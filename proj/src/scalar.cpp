#include "lietensor/scalar.hpp"

#include "lietensor/error.hpp"

namespace lietensor {

ScalarExpr::ScalarExpr(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void ScalarExpr::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(den_.constant_term().reciprocal());
    den_ = Polynomial(1);
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = Polynomial(1);
    return;
  }
  const Monomial common = num_.monomial_content().gcd(den_.monomial_content());
  if (!common.is_one()) {
    num_ = *num_.divide_exact(Polynomial::term(Rational(1), common));
    den_ = *den_.divide_exact(Polynomial::term(Rational(1), common));
  }
  Rational scale = den_.content();
  if (den_.leading_coefficient().sign() < 0) scale = -scale;
  num_ = num_.scaled(scale.reciprocal());
  den_ = den_.scaled(scale.reciprocal());
}

std::set<std::string> ScalarExpr::variables() const {
  auto out = num_.variables();
  out.merge(den_.variables());
  return out;
}

ScalarExpr ScalarExpr::operator-() const {
  ScalarExpr out = *this;
  out.num_ = -out.num_;
  return out;
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& o) { return *this += -o; }

ScalarExpr& ScalarExpr::operator*=(const ScalarExpr& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = ScalarExpr();
  num_ *= o.num_;
  if (!o.den_.is_constant() || !o.den_.constant_term().is_one()) den_ *= o.den_;
  normalize();
  return *this;
}

ScalarExpr& ScalarExpr::operator/=(const ScalarExpr& o) {
  if (o.is_zero()) throw DivisionByZero();
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

bool operator==(const ScalarExpr& a, const ScalarExpr& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Rational ScalarExpr::evaluate(const ParameterAssignment& at) const {
  const Rational den = den_.evaluate(at);
  if (den.is_zero())
    throw EvaluationError(EvaluationError::Kind::DenominatorVanishes,
                          "denominator " + den_.str() + " vanishes at " + at.str());
  return num_.evaluate(at) / den;
}

ScalarExpr ScalarExpr::substitute(const std::string& name, const ScalarExpr& value) const {
  // Homogenize: p(x -> n/d) = P(n, d) / d^deg, computed per term.
  auto lift = [&](const Polynomial& p, unsigned degree) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
      const unsigned e = m.exponent(name);
      Monomial rest;
      for (const auto& [v, k] : m.exponents())
        if (v != name) rest = rest * Monomial(v, k);
      out += (pow(value.num_, e) * pow(value.den_, degree - e)).times(rest).scaled(c);
    }
    return out;
  };
  auto degree_in = [&](const Polynomial& p) {
    unsigned d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m.exponent(name));
    return d;
  };
  const unsigned dn = degree_in(num_);
  const unsigned dd = degree_in(den_);
  const unsigned d = std::max(dn, dd);
  // num/den = lift(num, d) / lift(den, d); the common factor value.den^d cancels.
  const Polynomial new_num = lift(num_, d);
  const Polynomial new_den = lift(den_, d);
  if (new_den.is_zero()) throw DivisionByZero();
  return ScalarExpr(new_num, new_den);
}

ScalarExpr ScalarExpr::substitute(const ParameterAssignment& at) const {
  const Polynomial den = den_.substitute(at);
  if (den.is_zero())
    throw EvaluationError(EvaluationError::Kind::DenominatorVanishes,
                          "denominator " + den_.str() + " vanishes at " + at.str());
  return ScalarExpr(num_.substitute(at), den);
}

std::string ScalarExpr::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

ScalarExpr pow(const ScalarExpr& base, unsigned exponent) {
  ScalarExpr result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace lietensor
