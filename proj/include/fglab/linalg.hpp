#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fglab/coeff_ring.hpp"

namespace fglab {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::vector<Int> row(std::size_t r) const;

  IntMatrix operator*(const IntMatrix& o) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

/// Dense row-major matrix over a field.
template <CoeffRing R>
using FieldMatrix = std::vector<std::vector<R>>;

/// Reduced row echelon form in place; zero rows are removed. Returns the
/// pivot column of each remaining row.
template <CoeffRing R>
std::vector<std::size_t> row_reduce(FieldMatrix<R>& a, std::size_t cols) {
  using T = ring_traits<R>;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && T::is_zero(a[p][c])) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    R inv = T::inverse(a[r][c]);
    for (auto& x : a[r]) x = x * inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || T::is_zero(a[i][c])) continue;
      R f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

template <CoeffRing R>
std::size_t field_rank(FieldMatrix<R> a, std::size_t cols) {
  return row_reduce(a, cols).size();
}

/// Kernel basis, one vector per free column, in increasing free-column order.
template <CoeffRing R>
std::vector<std::vector<R>> field_kernel(FieldMatrix<R> a, std::size_t cols) {
  using T = ring_traits<R>;
  auto pivots = row_reduce(a, cols);
  std::vector<std::vector<R>> out;
  std::size_t pi = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pi < pivots.size() && pivots[pi] == f) {
      ++pi;
      continue;
    }
    std::vector<R> v(cols, T::zero());
    v[f] = T::one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

/// A solution of a x = b with every free variable set to zero, or nullopt.
template <CoeffRing R>
std::optional<std::vector<R>> field_solve(FieldMatrix<R> a, const std::vector<R>& b, std::size_t cols) {
  using T = ring_traits<R>;
  for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  auto pivots = row_reduce(a, cols + 1);
  std::vector<R> x(cols, T::zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt;
    x[pivots[i]] = a[i][cols];
  }
  return x;
}

}  // namespace fglab
