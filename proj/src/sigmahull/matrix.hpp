#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sigmahull/field.hpp"

namespace sigmahull {

using Vector = std::vector<Element>;

/// Dense row-major matrix over a finite field. Zero-row and zero-column
/// matrices are valid values (empty generators, empty kernels).
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> entries);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_indices(FieldPtr field, std::size_t rows, std::size_t cols,
                             std::span<const std::uint32_t> indices);
  static Matrix from_rows(FieldPtr field, std::size_t cols, const std::vector<Vector>& rows);

  const FieldPtr& field() const { return field_; }
  const Field& F() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Element operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const Element> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<Element> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  const std::vector<Element>& entries() const { return entries_; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix scaled(Element a) const;
  Matrix select_rows(std::size_t first, std::size_t count) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Pivots are taken in the leftmost column that has
/// a nonzero at or below the current row, choosing the topmost such row.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x^T = 0}; cols - rank rows.
Matrix kernel_basis(const Matrix& m);

/// Nonzero rows of rref(m).
Matrix row_space_basis(const Matrix& m);

Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix mat_frobenius(const Matrix& m, std::uint32_t s);
Matrix vstack(const Matrix& top, const Matrix& bottom);

/// v * m for a row vector v.
Vector vec_mat(std::span<const Element> v, const Matrix& m);
Element dot(const Field& f, std::span<const Element> a, std::span<const Element> b);
std::size_t hamming_weight(std::span<const Element> v);

}  // namespace sigmahull
