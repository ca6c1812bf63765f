#include "lietensor/structures.hpp"

#include "lietensor/error.hpp"

namespace lietensor {

Endomorphism Endomorphism::power(unsigned k) const {
  Endomorphism out = identity(dim());
  for (unsigned i = 0; i < k; ++i) out = out.compose(*this);
  return out;
}

Endomorphism Endomorphism::negated() const { return {m.transformed([](const ScalarExpr& x) { return -x; })}; }

ScalarExpr Endomorphism::trace() const {
  ScalarExpr sum;
  for (int i = 1; i <= dim(); ++i) sum += m(i, i);
  return sum;
}

Vector Endomorphism::apply(const Vector& v) const {
  Vector out(dim());
  for (int l = 1; l <= dim(); ++l)
    for (int j = 1; j <= dim(); ++j)
      if (!m(l, j).is_zero() && !v(j).is_zero()) out(l) += m(l, j) * v(j);
  return out;
}

Endomorphism circulant_shift(int n) {
  if (n < 2) throw DimensionError("circulant shift needs dimension >= 2");
  Endomorphism q{Matrix(n)};
  q.m(n, 1) = 1;
  for (int j = 2; j <= n; ++j) q.m(j - 1, j) = 1;
  return q;
}

StructureReport check_q_structure(const Endomorphism& q, const MetricTensor& g) {
  const int n = q.dim();
  const Endomorphism id = Endomorphism::identity(n);
  StructureReport r;
  r.p = q.power(2);
  r.q4_identity = q.power(4) == id;
  r.q2_not_pm_identity = !(r.p == id) && !(r.p == id.negated());
  r.isometry = matmul(transpose(q.m), matmul(g.matrix(), q.m)) == g.matrix();
  r.p2_identity = r.p.power(2) == id;
  r.p_not_pm_identity = r.q2_not_pm_identity;
  r.trace_p = r.p.trace();
  return r;
}

FTheta f_and_theta(const Connection& conn, const Endomorphism& p, const MetricTensor& g) {
  const int n = g.dim();
  if (!(p.power(2) == Endomorphism::identity(n))) throw Error("f_and_theta requires P^2 = id");
  const auto& G = conn.gamma;
  // ((∇_{e_i} P) e_j)^l = Γ^l_im P^m_j − P^l_m Γ^m_ij
  ExprArray<3> up(n);
  up.for_each_index([&](const auto& idx) {
    const auto [i, j, l] = idx;
    ScalarExpr sum;
    for (int m = 1; m <= n; ++m) {
      if (!G(i, m, l).is_zero() && !p.m(m, j).is_zero()) sum += G(i, m, l) * p.m(m, j);
      if (!p.m(l, m).is_zero() && !G(i, j, m).is_zero()) sum -= p.m(l, m) * G(i, j, m);
    }
    up(i, j, l) = sum;
  });
  FTheta out{Tensor03{ExprArray<3>(n)}, Covector{Vector(n)}};
  out.f.f.for_each_index([&](const auto& idx) {
    const auto [i, j, k] = idx;
    ScalarExpr sum;
    for (int l = 1; l <= n; ++l)
      if (!g(l, k).is_zero() && !up(i, j, l).is_zero()) sum += g(l, k) * up(i, j, l);
    out.f.f(i, j, k) = sum;
  });
  const Matrix& ginv = g.inverse();
  for (int k = 1; k <= n; ++k) {
    ScalarExpr sum;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (!ginv(i, j).is_zero() && !out.f.f(i, j, k).is_zero()) sum += ginv(i, j) * out.f.f(i, j, k);
    out.theta.theta(k) = sum;
  }
  return out;
}

ConstraintSet fprop_residuals(const Tensor03& F, const Endomorphism& p) {
  const int n = F.f.dim();
  const auto& f = F.f;
  std::vector<ScalarExpr> raw;
  f.for_each_index([&](const auto& idx) {
    const auto [i, j, k] = idx;
    raw.push_back(f(i, j, k) - f(i, k, j));
    ScalarExpr transformed;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        if (!p.m(a, j).is_zero() && !p.m(b, k).is_zero() && !f(i, a, b).is_zero())
          transformed += f(i, a, b) * p.m(a, j) * p.m(b, k);
    raw.push_back(f(i, j, k) + transformed);
  });
  return canonicalize(raw);
}

ConstraintSet w0_constraints(const Tensor03& F) {
  std::vector<ScalarExpr> raw;
  F.f.for_each_index([&](const auto& idx) { raw.push_back(F.f.at(idx)); });
  return canonicalize(raw);
}

ConstraintSet w1_constraints(const Tensor03& F, const Covector& theta, const MetricTensor& g, const Endomorphism& p) {
  const int n = F.f.dim();
  if (n != 4) throw DimensionError("the W1 condition is only defined in dimension 4");
  // g(e_x, P e_y) and θ(P e_z)
  Matrix gp(n);
  Vector theta_p(n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int m = 1; m <= n; ++m) gp(x, y) += g(x, m) * p.m(m, y);
  for (int z = 1; z <= n; ++z)
    for (int m = 1; m <= n; ++m) theta_p(z) += theta.theta(m) * p.m(m, z);
  const auto& th = theta.theta;
  std::vector<ScalarExpr> raw;
  F.f.for_each_index([&](const auto& idx) {
    const auto [x, y, z] = idx;
    const ScalarExpr rhs = g(x, y) * th(z) + g(x, z) * th(y) - gp(x, y) * theta_p(z) - gp(x, z) * theta_p(y);
    raw.push_back(ScalarExpr(4) * F.f(x, y, z) - rhs);
  });
  return canonicalize(raw);
}

ClassConstraints class_constraints(const Tensor03& F, const Covector& theta, const MetricTensor& g,
                                   const Endomorphism& p) {
  return {w0_constraints(F), w1_constraints(F, theta, g, p)};
}

ExprArray<4> q_transform(const Curvature04& R, const Endomorphism& q) {
  const int n = R.r.dim();
  // Contract one slot at a time: T(..., Qe_i, ...) = Q^p_i T(..., e_p, ...).
  ExprArray<4> t = R.r;
  for (int slot = 0; slot < 4; ++slot) {
    ExprArray<4> next(n);
    next.for_each_index([&](const auto& idx) {
      ScalarExpr sum;
      auto src = idx;
      for (int p = 1; p <= n; ++p) {
        if (q.m(p, idx[slot]).is_zero()) continue;
        src[slot] = p;
        if (!t.at(src).is_zero()) sum += q.m(p, idx[slot]) * t.at(src);
      }
      next.at(idx) = sum;
    });
    t = std::move(next);
  }
  return t;
}

ConstraintSet r_invariance_constraints(const Curvature04& R, const Endomorphism& q) {
  const ExprArray<4> t = q_transform(R, q);
  std::vector<ScalarExpr> raw;
  t.for_each_index([&](const auto& idx) { raw.push_back(t.at(idx) - R.r.at(idx)); });
  return canonicalize(raw);
}

ConstraintSet rloc_reduced_constraints(const Curvature04& R) {
  if (R.r.dim() != 4) throw DimensionError("the reduced R-invariance list is only defined in dimension 4");
  using Idx = std::array<int, 4>;
  static const std::vector<std::vector<Idx>> chains = {
      {{1, 2, 1, 2}, {3, 4, 3, 4}, {2, 3, 2, 3}, {1, 4, 1, 4}},
      {{1, 3, 1, 3}, {2, 4, 2, 4}},
      {{1, 2, 1, 3}, {2, 3, 2, 4}, {1, 4, 2, 4}, {3, 1, 3, 4}},
      {{1, 2, 1, 4}, {1, 4, 3, 4}, {2, 1, 2, 3}, {3, 2, 3, 4}},
      {{1, 2, 2, 4}, {3, 1, 2, 3}, {3, 1, 1, 4}, {4, 2, 3, 4}},
  };
  std::vector<ScalarExpr> raw;
  for (const auto& chain : chains)
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) raw.push_back(R.r.at(chain[i]) - R.r.at(chain[i + 1]));
  raw.push_back(R.r(1, 3, 2, 4));
  return canonicalize(raw);
}

ConstraintSet einstein_constraints(const RicciScalar& rs, const MetricTensor& g) {
  const int n = g.dim();
  std::vector<ScalarExpr> raw;
  const ScalarExpr mean = rs.scalar / ScalarExpr(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) raw.push_back(rs.ricci(i, j) - mean * g(i, j));
  return canonicalize(raw);
}

ConstraintSet constant_curvature_constraints(const Curvature04& R, const MetricTensor& g) {
  const int n = g.dim();
  const ScalarExpr kappa = sectional(R, g, basis_vector(n, 1), basis_vector(n, 2));
  std::vector<ScalarExpr> raw;
  R.r.for_each_index([&](const auto& idx) {
    const auto [i, j, k, l] = idx;
    raw.push_back(R.r(i, j, k, l) - kappa * (g(i, k) * g(j, l) - g(i, l) * g(j, k)));
  });
  return canonicalize(raw);
}

CurvatureClassConstraints einstein_and_constant_curvature_constraints(const Curvature04& R, const RicciScalar& rs,
                                                                      const MetricTensor& g) {
  return {einstein_constraints(rs, g), constant_curvature_constraints(R, g)};
}

}  // namespace lietensor
