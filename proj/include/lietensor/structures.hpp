#pragma once

#include "lietensor/constraints.hpp"
#include "lietensor/geometry.hpp"

namespace lietensor {

/// Linear map of the Lie algebra; m(l, j) is the e_l-coefficient of the image of e_j.
struct Endomorphism {
  Matrix m;

  int dim() const { return m.dim(); }
  static Endomorphism identity(int dim) { return {identity_matrix(dim)}; }
  /// (this ∘ o)
  Endomorphism compose(const Endomorphism& o) const { return {matmul(m, o.m)}; }
  Endomorphism power(unsigned k) const;
  Endomorphism negated() const;
  ScalarExpr trace() const;
  Vector apply(const Vector& v) const;
  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;
};

/// Q e_1 = e_n and Q e_j = e_{j-1}; for n = 4 the matrix of components is the 4×4 circulant shift.
/// Throws DimensionError for n < 2.
Endomorphism circulant_shift(int n);

struct StructureReport {
  bool q4_identity = false;        // Q⁴ = id
  bool q2_not_pm_identity = false; // Q² ≠ ±id (not identically)
  bool isometry = false;           // Qᵀ g Q = g
  Endomorphism p;                  // P = Q²
  bool p2_identity = false;
  bool p_not_pm_identity = false;
  ScalarExpr trace_p;

  bool all_pass() const {
    return q4_identity && q2_not_pm_identity && isometry && p2_identity && p_not_pm_identity;
  }
};

StructureReport check_q_structure(const Endomorphism& q, const MetricTensor& g);

/// f(i, j, k) = F(e_i, e_j, e_k) = g((∇_{e_i} P) e_j, e_k).
struct Tensor03 {
  ExprArray<3> f;
};

struct Covector {
  Vector theta;
};

struct FTheta {
  Tensor03 f;
  Covector theta;  // θ(e_k) = g^{ij} F(e_i, e_j, e_k)
};

/// Throws Error when P² is not the identity.
FTheta f_and_theta(const Connection& conn, const Endomorphism& p, const MetricTensor& g);

/// Residuals of F(x,y,z) − F(x,z,y) and F(x,y,z) + F(x,Py,Pz).
ConstraintSet fprop_residuals(const Tensor03& F, const Endomorphism& p);

/// Class W0: every component of F.
ConstraintSet w0_constraints(const Tensor03& F);

/// Class W1 in dimension 4:
///   F(x,y,z) = ¼{g(x,y)θ(z) + g(x,z)θ(y) − g(x,Py)θ(Pz) − g(x,Pz)θ(Py)}.
/// Throws DimensionError otherwise.
ConstraintSet w1_constraints(const Tensor03& F, const Covector& theta, const MetricTensor& g, const Endomorphism& p);

struct ClassConstraints {
  ConstraintSet w0;
  ConstraintSet w1;
};

ClassConstraints class_constraints(const Tensor03& F, const Covector& theta, const MetricTensor& g,
                                   const Endomorphism& p);

/// All components of R(Qx, Qy, Qz, Qu) − R(x, y, z, u).
ConstraintSet r_invariance_constraints(const Curvature04& R, const Endomorphism& q);

/// Components R(Qe_i, Qe_j, Qe_k, Qe_l).
ExprArray<4> q_transform(const Curvature04& R, const Endomorphism& q);

/// Reduced equality list for the 4-dimensional circulant shift:
///   R1212 = R3434 = R2323 = R1414,   R1313 = R2424,
///   R1213 = R2324 = R1424 = R3134,   R1214 = R1434 = R2123 = R3234,
///   R1224 = R3123 = R3114 = R4234,   R1324 = 0.
/// Throws DimensionError for dimension other than 4.
ConstraintSet rloc_reduced_constraints(const Curvature04& R);

struct CurvatureClassConstraints {
  ConstraintSet einstein;    // ρ_ij − (τ/n) g_ij
  ConstraintSet const_curv;  // R_ijkl − κ (g_ik g_jl − g_il g_jk), κ = k(e_1, e_2)
};

ConstraintSet einstein_constraints(const RicciScalar& rs, const MetricTensor& g);
/// Throws DegeneratePlane if (e_1, e_2) is degenerate.
ConstraintSet constant_curvature_constraints(const Curvature04& R, const MetricTensor& g);

/// Throws DegeneratePlane if (e_1, e_2) is degenerate.
CurvatureClassConstraints einstein_and_constant_curvature_constraints(const Curvature04& R, const RicciScalar& rs,
                                                                      const MetricTensor& g);

}  // namespace lietensor
