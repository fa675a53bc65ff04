#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "rigidity/modp.hpp"

namespace rigidity {

template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Pivot policy per scalar type: exact fields compare to zero, doubles use a relative threshold.
template <class T>
struct PivotPolicy;

template <>
struct PivotPolicy<ModP> {
  explicit PivotPolicy(const DenseMatrix<ModP>&) {}
  bool negligible(ModP x) const { return x.is_zero(); }
  static double magnitude(ModP x) { return x.is_zero() ? 0.0 : 1.0; }
};

template <>
struct PivotPolicy<double> {
  static constexpr double kRelativeThreshold = 1e-9;
  explicit PivotPolicy(const DenseMatrix<double>& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) scale = std::max(scale, std::abs(m(r, c)));
  }
  bool negligible(double x) const { return std::abs(x) <= kRelativeThreshold * scale; }
  static double magnitude(double x) { return std::abs(x); }
  double scale = 0.0;
};

template <class T>
struct Elimination {
  DenseMatrix<T> reduced;
  std::vector<std::size_t> pivot_columns;
  /// Smallest accepted pivot relative to the largest entry; 1 for exact fields.
  double smallest_pivot_ratio = 1.0;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Reduced row echelon form with partial pivoting.
template <class T>
Elimination<T> row_reduce(DenseMatrix<T> m) {
  const PivotPolicy<T> policy(m);
  Elimination<T> out;
  std::size_t row = 0;
  double largest = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) largest = std::max(largest, PivotPolicy<T>::magnitude(m(r, c)));
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < m.rows(); ++r)
      if (PivotPolicy<T>::magnitude(m(r, col)) > PivotPolicy<T>::magnitude(m(best, col))) best = r;
    if (policy.negligible(m(best, col))) {
      for (std::size_t r = row; r < m.rows(); ++r) m(r, col) = T{};
      continue;
    }
    if (largest > 0.0)
      out.smallest_pivot_ratio = std::min(out.smallest_pivot_ratio, PivotPolicy<T>::magnitude(m(best, col)) / largest);
    if (best != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));
    const T inv = T{1} / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const T f = m(r, col);
      if (f == T{}) continue;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = m(r, c) - f * m(row, c);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class T>
std::size_t matrix_rank(const DenseMatrix<T>& m) {
  return row_reduce(m).rank();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <class T>
std::vector<std::vector<T>> nullspace(const Elimination<T>& e) {
  const std::size_t cols = e.reduced.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> x(cols, T{});
    x[free] = T{1};
    for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) x[e.pivot_columns[k]] = T{} - e.reduced(k, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace rigidity
