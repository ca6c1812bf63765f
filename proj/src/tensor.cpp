#include "lietensor/tensor.hpp"

namespace lietensor {

Vector basis_vector(int dim, int i) {
  Vector v(dim);
  v(i) = 1;
  return v;
}

Matrix identity_matrix(int dim) {
  Matrix m(dim);
  for (int i = 1; i <= dim; ++i) m(i, i) = 1;
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const int n = a.dim();
  Matrix out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      ScalarExpr sum;
      for (int k = 1; k <= n; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) sum += a(i, k) * b(k, j);
      out(i, j) = sum;
    }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.dim());
  for (int i = 1; i <= m.dim(); ++i)
    for (int j = 1; j <= m.dim(); ++j) out(i, j) = m(j, i);
  return out;
}

}  // namespace lietensor
