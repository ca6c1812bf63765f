#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "lietensor/constraints.hpp"
#include "lietensor/tensor.hpp"

namespace lietensor {

/// [e_i, e_j] has coefficient `coef` on e_k; requires 1 <= i < j <= dim.
struct BracketEntry {
  int i;
  int j;
  int k;
  ScalarExpr coef;
};

/// Antisymmetric bracket table c(i, j, k) = c^k_ij, not yet checked for Jacobi.
class StructureConstants {
 public:
  /// Applies antisymmetric completion. Throws LieAlgebraError on a bad index or a repeated (i, j, k).
  StructureConstants(int dim, const std::vector<BracketEntry>& entries);

  int dim() const { return c_.dim(); }
  const ScalarExpr& operator()(int i, int j, int k) const { return c_(i, j, k); }
  const ExprArray<3>& array() const { return c_; }

 private:
  ExprArray<3> c_;
};

/// Components of [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] on e_m, indexed (i, j, k, m).
ExprArray<4> jacobiator(const StructureConstants& c);
/// Canonical set of the nonvanishing Jacobiator components; empty iff Jacobi holds identically.
ConstraintSet jacobi_residual(const StructureConstants& c);
/// Triples i < j < k whose Jacobiator is not identically zero.
std::vector<std::array<int, 3>> jacobi_violations(const StructureConstants& c);

/// A validated real Lie algebra with symbolic structure constants.
class LieAlgebra {
 public:
  int dim() const { return c_.dim(); }
  const std::vector<std::string>& params() const { return params_; }
  /// e_k-coefficient of [e_i, e_j]; indices 1-based.
  const ScalarExpr& c(int i, int j, int k) const { return c_(i, j, k); }
  const StructureConstants& structure_constants() const { return c_; }
  /// Side conditions on the parameters as condition strings. Metadata only.
  const std::vector<std::string>& domain_notes() const { return notes_; }

 private:
  friend LieAlgebra make_lie_algebra(int, std::vector<std::string>, const std::vector<BracketEntry>&,
                                     std::vector<std::string>);
  LieAlgebra(StructureConstants c, std::vector<std::string> params, std::vector<std::string> notes)
      : c_(std::move(c)), params_(std::move(params)), notes_(std::move(notes)) {}

  StructureConstants c_;
  std::vector<std::string> params_;
  std::vector<std::string> notes_;
};

/// Throws LieAlgebraError for index errors, duplicates, undeclared parameters in
/// coefficients, or a Jacobi violation (the first offending triple is named).
LieAlgebra make_lie_algebra(int dim, std::vector<std::string> params, const std::vector<BracketEntry>& brackets,
                            std::vector<std::string> domain_notes = {});

ConstraintSet jacobi_residual(const LieAlgebra& algebra);

/// [x, y]^k = c^k_ij x^i y^j.
Vector bracket(const LieAlgebra& algebra, const Vector& x, const Vector& y);

/// True when c^k_ij + c^k_ji vanishes identically for every index triple.
bool is_antisymmetric(const StructureConstants& c);

enum class Family { G4_5, G4_6 };

/// Accepts "g4_5", "g4.5", "g4_6", "g4.6".
Family parse_family(std::string_view id);
std::string family_name(Family f);

/// The two-parameter Mubarakzyanov families, with a and b symbolic or concrete.
///   g4,5: [e1,e4] = e1,   [e2,e4] = a e2,        [e3,e4] = b e3
///   g4,6: [e1,e4] = a e1, [e2,e4] = b e2 - e3,   [e3,e4] = e2 + b e3
LieAlgebra builtin_family(Family f, const ScalarExpr& a, const ScalarExpr& b);
LieAlgebra builtin_family(std::string_view id, const ScalarExpr& a, const ScalarExpr& b);
/// With the symbols a and b as parameters.
LieAlgebra builtin_family(Family f);

std::vector<BracketEntry> family_brackets(Family f, const ScalarExpr& a, const ScalarExpr& b);
std::vector<std::string> family_domain(Family f);

}  // namespace lietensor
