#pragma once

#include <random>
#include <string>
#include <vector>

#include "lietensor/scalar.hpp"

namespace lietensor::testing {

/// Small rationals p/q with |p| <= max_num, 1 <= q <= max_den.
inline Rational random_rational(std::mt19937& rng, int max_num = 9, int max_den = 6) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline Rational random_nonzero_rational(std::mt19937& rng, int max_num = 9, int max_den = 6) {
  for (;;) {
    Rational r = random_rational(rng, max_num, max_den);
    if (!r.is_zero()) return r;
  }
}

/// Up to `terms` terms in the given variables, each of total degree <= max_degree.
inline Polynomial random_polynomial(std::mt19937& rng, const std::vector<std::string>& vars, int terms = 4,
                                    unsigned max_degree = 3) {
  std::uniform_int_distribution<int> count(0, terms);
  std::uniform_int_distribution<unsigned> exp(0, max_degree);
  Polynomial p;
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    Monomial m;
    unsigned budget = max_degree;
    for (const auto& v : vars) {
      const unsigned e = std::min(exp(rng), budget);
      budget -= e;
      m = m * Monomial(v, e);
    }
    p += Polynomial::term(random_rational(rng), m);
  }
  return p;
}

inline ParameterAssignment random_point(std::mt19937& rng, const std::vector<std::string>& vars) {
  ParameterAssignment at;
  for (const auto& v : vars) at.values.emplace(v, random_rational(rng));
  return at;
}

}  // namespace lietensor::testing
