#pragma once

#include "lietensor/lie_algebra.hpp"
#include "lietensor/tensor.hpp"

namespace lietensor {

/// Left-invariant metric given by its (constant) Gram matrix on e_1..e_n.
class MetricTensor {
 public:
  static MetricTensor identity(int dim);
  /// Throws MetricError if `g` is not symmetric or its determinant is the zero expression.
  static MetricTensor from_matrix(Matrix g);

  int dim() const { return g_.dim(); }
  const ScalarExpr& operator()(int i, int j) const { return g_(i, j); }
  const Matrix& matrix() const { return g_; }
  const Matrix& inverse() const { return g_inv_; }
  const ScalarExpr& determinant() const { return det_; }
  bool is_identity() const { return identity_; }

  /// g(x, y).
  ScalarExpr inner(const Vector& x, const Vector& y) const;

 private:
  MetricTensor(Matrix g, Matrix g_inv, ScalarExpr det, bool identity)
      : g_(std::move(g)), g_inv_(std::move(g_inv)), det_(std::move(det)), identity_(identity) {}

  Matrix g_;
  Matrix g_inv_;
  ScalarExpr det_;
  bool identity_ = false;
};

/// gamma(i, j, k) is the e_k-coefficient of ∇_{e_i} e_j.
struct Connection {
  ExprArray<3> gamma;
};

/// r(i, j, k, l) = g(R(e_i, e_j) e_k, e_l) with R(x,y) = ∇_x∇_y − ∇_y∇_x − ∇_[x,y].
struct Curvature04 {
  ExprArray<4> r;
};

struct RicciScalar {
  Matrix ricci;      // ρ(e_y, e_z) = g^{ij} R(e_i, e_y, e_z, e_j)
  ScalarExpr scalar; // τ = g^{ij} ρ(e_i, e_j)
};

/// Koszul formula for left-invariant fields:
///   2 g(∇_{e_i} e_j, e_k) = g([e_i,e_j], e_k) + g([e_k,e_i], e_j) + g([e_k,e_j], e_i).
/// Throws MetricError on a dimension mismatch.
Connection levi_civita(const LieAlgebra& algebra, const MetricTensor& g);

Curvature04 curvature(const LieAlgebra& algebra, const MetricTensor& g, const Connection& conn);

RicciScalar ricci_and_scalar(const Curvature04& R, const MetricTensor& g);

/// R(x, y, x, y) / (g(x,x) g(y,y) − g(x,y)²). Throws DegeneratePlane when the denominator is zero.
ScalarExpr sectional(const Curvature04& R, const MetricTensor& g, const Vector& x, const Vector& y);

/// Residuals of Γ^k_ij − Γ^k_ji − c^k_ij.
std::vector<ScalarExpr> torsion_residuals(const LieAlgebra& algebra, const Connection& conn);
/// Residuals of g_mk Γ^m_ij + g_jm Γ^m_ik.
std::vector<ScalarExpr> metric_compatibility_residuals(const MetricTensor& g, const Connection& conn);
/// Residuals of the antisymmetries, pair symmetry and first Bianchi identity.
std::vector<ScalarExpr> curvature_symmetry_residuals(const Curvature04& R);

}  // namespace lietensor
