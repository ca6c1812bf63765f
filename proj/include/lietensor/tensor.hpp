#pragma once

#include <array>
#include <cassert>
#include <cstddef>
#include <vector>

#include "lietensor/scalar.hpp"

namespace lietensor {

/// Dense n×…×n array of ScalarExpr with 1-based indices, matching e_1..e_n.
template <std::size_t Rank>
class ExprArray {
 public:
  using Index = std::array<int, Rank>;

  ExprArray() = default;
  explicit ExprArray(int dim) : dim_(dim), data_(size_for(dim)) {}

  int dim() const { return dim_; }

  template <class... I>
    requires(sizeof...(I) == Rank)
  ScalarExpr& operator()(I... idx) {
    return data_[offset(Index{static_cast<int>(idx)...})];
  }

  template <class... I>
    requires(sizeof...(I) == Rank)
  const ScalarExpr& operator()(I... idx) const {
    return data_[offset(Index{static_cast<int>(idx)...})];
  }

  ScalarExpr& at(const Index& idx) { return data_[offset(idx)]; }
  const ScalarExpr& at(const Index& idx) const { return data_[offset(idx)]; }

  /// Calls f(index) for every index tuple in lexicographic order.
  template <class F>
  void for_each_index(F&& f) const {
    Index idx;
    idx.fill(1);
    if (dim_ == 0) return;
    for (;;) {
      f(static_cast<const Index&>(idx));
      std::size_t pos = Rank;
      while (pos > 0) {
        --pos;
        if (++idx[pos] <= dim_) break;
        idx[pos] = 1;
        if (pos == 0) return;
      }
      if constexpr (Rank == 0) return;
    }
  }

  template <class F>
  ExprArray transformed(F&& f) const {
    ExprArray out(dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = f(data_[i]);
    return out;
  }

  friend bool operator==(const ExprArray& a, const ExprArray& b) { return a.dim_ == b.dim_ && a.data_ == b.data_; }

 private:
  static std::size_t size_for(int dim) {
    std::size_t n = 1;
    for (std::size_t r = 0; r < Rank; ++r) n *= static_cast<std::size_t>(dim);
    return n;
  }

  std::size_t offset(const Index& idx) const {
    std::size_t off = 0;
    for (int i : idx) {
      assert(i >= 1 && i <= dim_);
      off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i - 1);
    }
    return off;
  }

  int dim_ = 0;
  std::vector<ScalarExpr> data_;
};

using Vector = ExprArray<1>;
using Matrix = ExprArray<2>;

/// e_i as a coordinate vector.
Vector basis_vector(int dim, int i);
Matrix identity_matrix(int dim);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

}  // namespace lietensor
