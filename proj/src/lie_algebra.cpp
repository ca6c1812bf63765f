#include "lietensor/lie_algebra.hpp"

#include <algorithm>
#include <set>

#include "lietensor/error.hpp"

namespace lietensor {

StructureConstants::StructureConstants(int dim, const std::vector<BracketEntry>& entries) : c_(dim) {
  if (dim < 1) throw LieAlgebraError(LieAlgebraError::Kind::IndexOutOfRange, "dimension must be positive");
  std::set<std::array<int, 3>> seen;
  for (const auto& e : entries) {
    const bool in_range = e.i >= 1 && e.j <= dim && e.i < e.j && e.k >= 1 && e.k <= dim;
    if (!in_range)
      throw LieAlgebraError(LieAlgebraError::Kind::IndexOutOfRange,
                            "bracket entry (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ", " +
                                std::to_string(e.k) + ") out of range; need 1 <= i < j <= " + std::to_string(dim) +
                                " and 1 <= k <= " + std::to_string(dim));
    if (!seen.insert({e.i, e.j, e.k}).second)
      throw LieAlgebraError(LieAlgebraError::Kind::DuplicateEntry,
                            "duplicate bracket entry (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ", " +
                                std::to_string(e.k) + ")");
    c_(e.i, e.j, e.k) = e.coef;
    c_(e.j, e.i, e.k) = -e.coef;
  }
}

ExprArray<4> jacobiator(const StructureConstants& c) {
  const int n = c.dim();
  ExprArray<4> out(n);
  // [[e_i,e_j],e_k]^m = c^p_ij c^m_pk
  auto nested = [&](int i, int j, int k, int m) {
    ScalarExpr sum;
    for (int p = 1; p <= n; ++p)
      if (!c(i, j, p).is_zero() && !c(p, k, m).is_zero()) sum += c(i, j, p) * c(p, k, m);
    return sum;
  };
  out.for_each_index([&](const auto& idx) {
    const auto [i, j, k, m] = idx;
    out(i, j, k, m) = nested(i, j, k, m) + nested(j, k, i, m) + nested(k, i, j, m);
  });
  return out;
}

ConstraintSet jacobi_residual(const StructureConstants& c) {
  const ExprArray<4> jac = jacobiator(c);
  std::vector<ScalarExpr> raw;
  jac.for_each_index([&](const auto& idx) {
    if (!jac.at(idx).is_zero()) raw.push_back(jac.at(idx));
  });
  return canonicalize(raw);
}

std::vector<std::array<int, 3>> jacobi_violations(const StructureConstants& c) {
  const int n = c.dim();
  const ExprArray<4> jac = jacobiator(c);
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int m = 1; m <= n; ++m)
          if (!jac(i, j, k, m).is_zero()) {
            out.push_back({i, j, k});
            break;
          }
  return out;
}

bool is_antisymmetric(const StructureConstants& c) {
  bool ok = true;
  c.array().for_each_index([&](const auto& idx) {
    const auto [i, j, k] = idx;
    if (!(c(i, j, k) + c(j, i, k)).is_zero()) ok = false;
  });
  return ok;
}

LieAlgebra make_lie_algebra(int dim, std::vector<std::string> params, const std::vector<BracketEntry>& brackets,
                            std::vector<std::string> domain_notes) {
  for (const auto& e : brackets)
    for (const auto& v : e.coef.variables())
      if (std::find(params.begin(), params.end(), v) == params.end())
        throw LieAlgebraError(LieAlgebraError::Kind::UnknownParameter,
                              "coefficient uses undeclared parameter '" + v + "'");
  StructureConstants c(dim, brackets);
  if (const auto bad = jacobi_violations(c); !bad.empty()) {
    const auto [i, j, k] = bad.front();
    throw LieAlgebraError(LieAlgebraError::Kind::JacobiViolation,
                          "Jacobi identity fails for (e" + std::to_string(i) + ", e" + std::to_string(j) + ", e" +
                              std::to_string(k) + ")");
  }
  return LieAlgebra(std::move(c), std::move(params), std::move(domain_notes));
}

ConstraintSet jacobi_residual(const LieAlgebra& algebra) { return jacobi_residual(algebra.structure_constants()); }

Vector bracket(const LieAlgebra& algebra, const Vector& x, const Vector& y) {
  const int n = algebra.dim();
  if (x.dim() != n || y.dim() != n)
    throw LieAlgebraError(LieAlgebraError::Kind::DimensionMismatch, "bracket arguments must have length " +
                                                                        std::to_string(n));
  Vector out(n);
  for (int i = 1; i <= n; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 1; j <= n; ++j) {
      if (y(j).is_zero()) continue;
      const ScalarExpr xy = x(i) * y(j);
      for (int k = 1; k <= n; ++k)
        if (!algebra.c(i, j, k).is_zero()) out(k) += algebra.c(i, j, k) * xy;
    }
  }
  return out;
}

Family parse_family(std::string_view id) {
  if (id == "g4_5" || id == "g4.5") return Family::G4_5;
  if (id == "g4_6" || id == "g4.6") return Family::G4_6;
  throw LieAlgebraError(LieAlgebraError::Kind::UnknownFamily, "unknown family '" + std::string(id) + "'");
}

std::string family_name(Family f) { return f == Family::G4_5 ? "g4.5" : "g4.6"; }

std::vector<BracketEntry> family_brackets(Family f, const ScalarExpr& a, const ScalarExpr& b) {
  switch (f) {
    case Family::G4_5:
      return {{1, 4, 1, 1}, {2, 4, 2, a}, {3, 4, 3, b}};
    case Family::G4_6:
      return {{1, 4, 1, a}, {2, 4, 2, b}, {2, 4, 3, -1}, {3, 4, 2, 1}, {3, 4, 3, b}};
  }
  throw LieAlgebraError(LieAlgebraError::Kind::UnknownFamily, "unknown family");
}

std::vector<std::string> family_domain(Family f) {
  if (f == Family::G4_5) return {"-1 <= b <= a <= 1", "a*b != 0"};
  return {"a != 0", "b >= 0"};
}

LieAlgebra builtin_family(Family f, const ScalarExpr& a, const ScalarExpr& b) {
  std::set<std::string> vars = a.variables();
  vars.merge(b.variables());
  return make_lie_algebra(4, {vars.begin(), vars.end()}, family_brackets(f, a, b), family_domain(f));
}

LieAlgebra builtin_family(std::string_view id, const ScalarExpr& a, const ScalarExpr& b) {
  return builtin_family(parse_family(id), a, b);
}

LieAlgebra builtin_family(Family f) {
  return builtin_family(f, ScalarExpr::variable("a"), ScalarExpr::variable("b"));
}

}  // namespace lietensor
