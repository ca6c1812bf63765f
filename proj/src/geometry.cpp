#include "lietensor/geometry.hpp"

#include "lietensor/error.hpp"

namespace lietensor {

MetricTensor MetricTensor::identity(int dim) {
  return MetricTensor(identity_matrix(dim), identity_matrix(dim), ScalarExpr(1), true);
}

MetricTensor MetricTensor::from_matrix(Matrix g) {
  const int n = g.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!(g(i, j) == g(j, i)))
        throw MetricError(MetricError::Kind::NotSymmetric,
                          "metric is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");

  // Gauss-Jordan over rational functions; a pivot is any entry that is not identically zero.
  Matrix work = g;
  Matrix inv = identity_matrix(n);
  ScalarExpr det(1);
  for (int col = 1; col <= n; ++col) {
    int pivot = 0;
    for (int row = col; row <= n; ++row)
      if (!work(row, col).is_zero()) {
        pivot = row;
        break;
      }
    if (pivot == 0) throw MetricError(MetricError::Kind::Singular, "metric is singular");
    if (pivot != col) {
      for (int k = 1; k <= n; ++k) {
        std::swap(work(pivot, k), work(col, k));
        std::swap(inv(pivot, k), inv(col, k));
      }
      det = -det;
    }
    const ScalarExpr p = work(col, col);
    det *= p;
    for (int k = 1; k <= n; ++k) {
      work(col, k) /= p;
      inv(col, k) /= p;
    }
    for (int row = 1; row <= n; ++row) {
      if (row == col || work(row, col).is_zero()) continue;
      const ScalarExpr f = work(row, col);
      for (int k = 1; k <= n; ++k) {
        work(row, k) -= f * work(col, k);
        inv(row, k) -= f * inv(col, k);
      }
    }
  }
  const bool identity = g == identity_matrix(n);
  return MetricTensor(std::move(g), std::move(inv), std::move(det), identity);
}

ScalarExpr MetricTensor::inner(const Vector& x, const Vector& y) const {
  ScalarExpr sum;
  for (int i = 1; i <= dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 1; j <= dim(); ++j)
      if (!y(j).is_zero() && !g_(i, j).is_zero()) sum += g_(i, j) * x(i) * y(j);
  }
  return sum;
}

Connection levi_civita(const LieAlgebra& algebra, const MetricTensor& g) {
  const int n = algebra.dim();
  if (g.dim() != n) throw MetricError(MetricError::Kind::DimensionMismatch, "metric and algebra dimensions differ");
  // g([e_a, e_b], e_k) = c^m_ab g_mk
  auto lowered = [&](int a, int b, int k) {
    ScalarExpr sum;
    for (int m = 1; m <= n; ++m)
      if (!algebra.c(a, b, m).is_zero() && !g(m, k).is_zero()) sum += algebra.c(a, b, m) * g(m, k);
    return sum;
  };
  ExprArray<3> koszul(n);  // g(∇_{e_i} e_j, e_k)
  koszul.for_each_index([&](const auto& idx) {
    const auto [i, j, k] = idx;
    koszul(i, j, k) = (lowered(i, j, k) + lowered(k, i, j) + lowered(k, j, i)) * ScalarExpr(Rational(1, 2));
  });
  Connection conn{ExprArray<3>(n)};
  const Matrix& ginv = g.inverse();
  conn.gamma.for_each_index([&](const auto& idx) {
    const auto [i, j, l] = idx;
    ScalarExpr sum;
    for (int k = 1; k <= n; ++k)
      if (!ginv(l, k).is_zero() && !koszul(i, j, k).is_zero()) sum += ginv(l, k) * koszul(i, j, k);
    conn.gamma(i, j, l) = sum;
  });
  return conn;
}

Curvature04 curvature(const LieAlgebra& algebra, const MetricTensor& g, const Connection& conn) {
  const int n = algebra.dim();
  const auto& G = conn.gamma;
  // (R(e_i,e_j)e_k)^m = Γ^p_jk Γ^m_ip − Γ^p_ik Γ^m_jp − c^p_ij Γ^m_pk
  ExprArray<4> up(n);
  up.for_each_index([&](const auto& idx) {
    const auto [i, j, k, m] = idx;
    ScalarExpr sum;
    for (int p = 1; p <= n; ++p) {
      if (!G(j, k, p).is_zero() && !G(i, p, m).is_zero()) sum += G(j, k, p) * G(i, p, m);
      if (!G(i, k, p).is_zero() && !G(j, p, m).is_zero()) sum -= G(i, k, p) * G(j, p, m);
      if (!algebra.c(i, j, p).is_zero() && !G(p, k, m).is_zero()) sum -= algebra.c(i, j, p) * G(p, k, m);
    }
    up(i, j, k, m) = sum;
  });
  Curvature04 R{ExprArray<4>(n)};
  R.r.for_each_index([&](const auto& idx) {
    const auto [i, j, k, l] = idx;
    ScalarExpr sum;
    for (int m = 1; m <= n; ++m)
      if (!up(i, j, k, m).is_zero() && !g(m, l).is_zero()) sum += g(m, l) * up(i, j, k, m);
    R.r(i, j, k, l) = sum;
  });
  return R;
}

RicciScalar ricci_and_scalar(const Curvature04& R, const MetricTensor& g) {
  const int n = R.r.dim();
  const Matrix& ginv = g.inverse();
  RicciScalar out{Matrix(n), ScalarExpr()};
  for (int y = 1; y <= n; ++y)
    for (int z = 1; z <= n; ++z) {
      ScalarExpr sum;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          if (!ginv(i, j).is_zero() && !R.r(i, y, z, j).is_zero()) sum += ginv(i, j) * R.r(i, y, z, j);
      out.ricci(y, z) = sum;
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!ginv(i, j).is_zero() && !out.ricci(i, j).is_zero()) out.scalar += ginv(i, j) * out.ricci(i, j);
  return out;
}

ScalarExpr sectional(const Curvature04& R, const MetricTensor& g, const Vector& x, const Vector& y) {
  const ScalarExpr gxy = g.inner(x, y);
  const ScalarExpr gram = g.inner(x, x) * g.inner(y, y) - gxy * gxy;
  if (gram.is_zero()) throw DegeneratePlane();
  ScalarExpr rxyxy;
  R.r.for_each_index([&](const auto& idx) {
    const auto [i, j, k, l] = idx;
    if (R.r(i, j, k, l).is_zero() || x(i).is_zero() || y(j).is_zero() || x(k).is_zero() || y(l).is_zero()) return;
    rxyxy += R.r(i, j, k, l) * x(i) * y(j) * x(k) * y(l);
  });
  return rxyxy / gram;
}

std::vector<ScalarExpr> torsion_residuals(const LieAlgebra& algebra, const Connection& conn) {
  std::vector<ScalarExpr> out;
  conn.gamma.for_each_index([&](const auto& idx) {
    const auto [i, j, k] = idx;
    out.push_back(conn.gamma(i, j, k) - conn.gamma(j, i, k) - algebra.c(i, j, k));
  });
  return out;
}

std::vector<ScalarExpr> metric_compatibility_residuals(const MetricTensor& g, const Connection& conn) {
  const int n = g.dim();
  std::vector<ScalarExpr> out;
  conn.gamma.for_each_index([&](const auto& idx) {
    const auto [i, j, k] = idx;
    ScalarExpr sum;
    for (int m = 1; m <= n; ++m) sum += g(m, k) * conn.gamma(i, j, m) + g(j, m) * conn.gamma(i, k, m);
    out.push_back(sum);
  });
  return out;
}

std::vector<ScalarExpr> curvature_symmetry_residuals(const Curvature04& R) {
  std::vector<ScalarExpr> out;
  const auto& r = R.r;
  r.for_each_index([&](const auto& idx) {
    const auto [i, j, k, l] = idx;
    out.push_back(r(i, j, k, l) + r(j, i, k, l));
    out.push_back(r(i, j, k, l) + r(i, j, l, k));
    out.push_back(r(i, j, k, l) - r(k, l, i, j));
    out.push_back(r(i, j, k, l) + r(j, k, i, l) + r(k, i, j, l));
  });
  return out;
}

}  // namespace lietensor
