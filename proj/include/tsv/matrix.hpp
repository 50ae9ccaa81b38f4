#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tsv/errors.hpp"
#include "tsv/scalar.hpp"

namespace tsv {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw DimensionError("matrix entry count " + std::to_string(entries_.size()) + " does not match " +
                           std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  static Matrix diagonal(const std::vector<T>& diag) {
    Matrix out(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const T> entries() const noexcept { return entries_; }
  std::span<const T> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const T& v) { return tsv::is_zero(v); });
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
    Matrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(entries_.size());
    for (const auto& v : entries_) out.push_back(f(v));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

  Matrix operator-() const {
    Matrix out = *this;
    for (auto& v : out.entries_) v = -v;
    return out;
  }

  Matrix& operator+=(const Matrix& other) {
    check_same_shape(other, "+");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& other) {
    check_same_shape(other, "-");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
  }
  Matrix& operator*=(const T& factor) {
    for (auto& v : entries_) v *= factor;
    return *this;
  }

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, const T& factor) { return lhs *= factor; }
  friend Matrix operator*(const T& factor, Matrix rhs) { return rhs *= factor; }

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) {
      throw DimensionError("cannot multiply " + lhs.shape() + " by " + rhs.shape());
    }
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
      for (std::size_t k = 0; k < lhs.cols_; ++k) {
        const T& a = lhs(i, k);
        if (tsv::is_zero(a)) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  friend std::vector<T> operator*(const Matrix& lhs, const std::vector<T>& v) {
    if (lhs.cols_ != v.size()) throw DimensionError("matrix-vector size mismatch");
    std::vector<T> out(lhs.rows_, T(0));
    for (std::size_t i = 0; i < lhs.rows_; ++i)
      for (std::size_t k = 0; k < lhs.cols_; ++k) out[i] += lhs(i, k) * v[k];
    return out;
  }

  friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.entries_ == rhs.entries_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same_shape(const Matrix& other, const char* op) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw DimensionError(std::string("shape mismatch in ") + op + ": " + shape() + " vs " + other.shape());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using ScalarMatrix = Matrix<Scalar>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using ScalarVector = std::vector<Scalar>;

/// ((a, b), (c, d)) assembled from four blocks.
template <class T>
Matrix<T> block2x2(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c, const Matrix<T>& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols()) {
    throw DimensionError("inconsistent block shapes");
  }
  Matrix<T> out(a.rows() + c.rows(), a.cols() + b.cols());
  auto put = [&out](const Matrix<T>& m, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(r0 + i, c0 + j) = m(i, j);
  };
  put(a, 0, 0);
  put(b, 0, a.cols());
  put(c, a.rows(), 0);
  put(d, a.rows(), a.cols());
  return out;
}

template <class T>
Matrix<T> block_diagonal(const Matrix<T>& a, const Matrix<T>& d) {
  return block2x2(a, Matrix<T>(a.rows(), d.cols()), Matrix<T>(d.rows(), a.cols()), d);
}

inline RatMatrix to_rational(const IntMatrix& m) {
  return m.map([](const Integer& v) { return Rational(v); });
}
inline ScalarMatrix to_scalar(const IntMatrix& m) {
  return m.map([](const Integer& v) { return Scalar(v); });
}
inline ScalarMatrix to_scalar(const RatMatrix& m) {
  return m.map([](const Rational& v) { return Scalar(v); });
}

/// Strict weak order on matrices (shape, then entries) for dedup containers.
struct MatrixLess {
  bool operator()(const IntMatrix& lhs, const IntMatrix& rhs) const {
    if (lhs.rows() != rhs.rows()) return lhs.rows() < rhs.rows();
    if (lhs.cols() != rhs.cols()) return lhs.cols() < rhs.cols();
    auto a = lhs.entries();
    auto b = rhs.entries();
    for (std::size_t k = 0; k < a.size(); ++k) {
      int c = cmp(a[k], b[k]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

/// "[[a,b],[c,d]]" with exact entries.
template <class T>
std::string format_matrix(const Matrix<T>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += to_string(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

template <class T>
std::string format_vector(const std::vector<T>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace tsv
