#pragma once

#include <optional>
#include <vector>

#include "tsv/matrix.hpp"

// Exact Gaussian elimination over Q and Q(sqrt d). Templated on the field so
// the same code serves RatMatrix and ScalarMatrix.

namespace tsv {

template <class F>
struct RowEchelon {
  Matrix<F> reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

template <class F>
RowEchelon<F> row_reduce(Matrix<F> m) {
  RowEchelon<F> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
    F inv = F(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = F(m(row, j) * inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      F factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= F(factor * m(row, j));
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).pivots.size();
}

template <class F>
F determinant(Matrix<F> m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square " + m.shape() + " matrix");
  F det(1);
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) return F(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(pivot, j));
      det = -det;
    }
    det *= m(col, col);
    F inv = F(1) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      F factor = F(m(i, col) * inv);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= F(factor * m(col, j));
    }
  }
  return det;
}

/// Inverse, or nullopt when singular. Non-square input is a DimensionError.
template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square " + m.shape() + " matrix");
  const std::size_t n = m.rows();
  auto echelon = row_reduce(block2x2(m, Matrix<F>::identity(n), Matrix<F>(0, n), Matrix<F>(0, n)));
  if (echelon.pivots.size() < n || echelon.pivots[n - 1] != n - 1) return std::nullopt;
  return echelon.reduced.block(0, n, n, n);
}

/// Some x with m*x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length does not match " + m.shape());
  Matrix<F> augmented(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) augmented(i, j) = m(i, j);
    augmented(i, m.cols()) = b[i];
  }
  auto echelon = row_reduce(std::move(augmented));
  std::vector<F> x(m.cols(), F(0));
  for (std::size_t r = 0; r < echelon.pivots.size(); ++r) {
    std::size_t col = echelon.pivots[r];
    if (col == m.cols()) return std::nullopt;
    x[col] = echelon.reduced(r, m.cols());
  }
  return x;
}

/// Basis of the right null space {x : m*x = 0} over the field.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
  auto echelon = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : echelon.pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < echelon.pivots.size(); ++r) v[echelon.pivots[r]] = -echelon.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Matrix whose columns are the given vectors.
template <class F>
Matrix<F> from_columns(const std::vector<std::vector<F>>& columns, std::size_t rows) {
  Matrix<F> out(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = columns[j][i];
  }
  return out;
}

}  // namespace tsv
