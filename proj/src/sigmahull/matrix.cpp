#include "sigmahull/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "sigmahull/error.hpp"

namespace sigmahull {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, kZero) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    fail(ErrorCode::InvalidArgument, "matrix needs " + std::to_string(rows_ * cols_) + " entries, got " +
                                         std::to_string(entries_.size()));
  for (auto a : entries_)
    if (!field_->contains(a)) fail(ErrorCode::InvalidArgument, "matrix entry outside " + field_->name());
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = kOne;
  return m;
}

Matrix Matrix::from_indices(FieldPtr field, std::size_t rows, std::size_t cols,
                            std::span<const std::uint32_t> indices) {
  std::vector<Element> entries;
  entries.reserve(indices.size());
  for (auto i : indices) entries.push_back(Element{i});
  return Matrix(std::move(field), rows, cols, std::move(entries));
}

Matrix Matrix::from_rows(FieldPtr field, std::size_t cols, const std::vector<Vector>& rows) {
  std::vector<Element> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) fail(ErrorCode::InvalidArgument, "ragged rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(std::move(field), rows.size(), cols, std::move(entries));
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Element a) { return a.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::scaled(Element a) const {
  Matrix out = *this;
  for (auto& x : out.entries_) x = field_->mul(a, x);
  return out;
}

Matrix Matrix::select_rows(std::size_t first, std::size_t count) const {
  if (first + count > rows_) fail(ErrorCode::InvalidArgument, "row range out of bounds");
  std::vector<Element> entries(entries_.begin() + first * cols_, entries_.begin() + (first + count) * cols_);
  return Matrix(field_, count, cols_, std::move(entries));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.cols_ != b.rows_)
    fail(ErrorCode::Incompatible, "cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                      " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  const Field& f = *a.field_;
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Element x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Element y = b(k, j);
        if (!y.is_zero()) out(i, j) = f.add(out(i, j), f.mul(x, y));
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::Incompatible, "matrix shapes differ");
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = a.field_->add(a.entries_[i], b.entries_[i]);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return same_field(a.field_, b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).idx;
    os << "]\n";
  }
  return os.str();
}

RrefResult rref(const Matrix& m) {
  const Field& f = m.F();
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < r.cols() && lead_row < r.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < r.rows() && r(pivot, col).is_zero()) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != lead_row) {
      auto a = r.row(pivot), b = r.row(lead_row);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Element inv = f.inv(r(lead_row, col));
    for (auto& x : r.row(lead_row)) x = f.mul(x, inv);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead_row) continue;
      const Element factor = r(i, col);
      if (factor.is_zero()) continue;
      const Element nf = f.neg(factor);
      auto src = r.row(lead_row);
      auto dst = r.row(i);
      for (std::size_t c = col; c < r.cols(); ++c)
        if (!src[c].is_zero()) dst[c] = f.add(dst[c], f.mul(nf, src[c]));
    }
    pivots.push_back(col);
    ++lead_row;
  }
  const std::size_t rk = pivots.size();
  return {std::move(r), rk, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  const Field& f = m.F();
  auto [reduced, rk, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis(m.field(), m.cols() - rk, m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = kOne;
    for (std::size_t i = 0; i < rk; ++i) basis(out, pivots[i]) = f.neg(reduced(i, free));
    ++out;
  }
  return basis;
}

Matrix row_space_basis(const Matrix& m) {
  auto r = rref(m);
  return r.reduced.select_rows(0, r.rank);
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  const Field& f = a.F();
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Element x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
    }
  return out;
}

Matrix mat_frobenius(const Matrix& m, std::uint32_t s) {
  const Field& f = m.F();
  if (s < 1 || s > f.e())
    fail(ErrorCode::InvalidExponent, "Frobenius exponent " + std::to_string(s) + " outside 1.." + std::to_string(f.e()));
  Matrix out = m;
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (auto& x : out.row(r)) x = f.frobenius(x, s);
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top.field(), bottom.field());
  if (top.cols() != bottom.cols()) fail(ErrorCode::Incompatible, "vstack column mismatch");
  std::vector<Element> entries = top.entries();
  entries.insert(entries.end(), bottom.entries().begin(), bottom.entries().end());
  return Matrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(entries));
}

Vector vec_mat(std::span<const Element> v, const Matrix& m) {
  if (v.size() != m.rows()) fail(ErrorCode::Incompatible, "vector length does not match matrix rows");
  const Field& f = m.F();
  Vector out(m.cols(), kZero);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    auto r = m.row(i);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(v[i], r[j]));
  }
  return out;
}

Element dot(const Field& f, std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) fail(ErrorCode::Incompatible, "dot product of unequal lengths");
  Element acc = kZero;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

std::size_t hamming_weight(std::span<const Element> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Element a) { return !a.is_zero(); }));
}

}  // namespace sigmahull
