#include "sigmahull/monomial.hpp"

#include <numeric>
#include <utility>

#include "sigmahull/error.hpp"

namespace sigmahull {

MonomialMatrix::MonomialMatrix(FieldPtr field, std::vector<std::size_t> perm, std::vector<Element> diag)
    : field_(std::move(field)), perm_(std::move(perm)), diag_(std::move(diag)) {
  if (perm_.size() != diag_.size()) fail(ErrorCode::InvalidArgument, "monomial perm/diag length mismatch");
  std::vector<bool> seen(perm_.size(), false);
  for (auto t : perm_) {
    if (t >= perm_.size() || seen[t]) fail(ErrorCode::InvalidArgument, "monomial perm is not a bijection");
    seen[t] = true;
  }
  for (auto d : diag_) {
    if (!field_->contains(d)) fail(ErrorCode::InvalidArgument, "monomial diagonal entry outside field");
    if (d.is_zero()) fail(ErrorCode::InvalidArgument, "monomial diagonal entry is zero");
  }
}

MonomialMatrix MonomialMatrix::identity(FieldPtr field, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return MonomialMatrix(std::move(field), std::move(perm), std::vector<Element>(n, kOne));
}

MonomialMatrix MonomialMatrix::diagonal(FieldPtr field, std::vector<Element> diag) {
  std::vector<std::size_t> perm(diag.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return MonomialMatrix(std::move(field), std::move(perm), std::move(diag));
}

MonomialMatrix MonomialMatrix::permutation(FieldPtr field, std::vector<std::size_t> perm) {
  const std::size_t n = perm.size();
  return MonomialMatrix(std::move(field), std::move(perm), std::vector<Element>(n, kOne));
}

MonomialMatrix MonomialMatrix::from_columns(FieldPtr field, std::vector<std::size_t> perm,
                                            const std::vector<Element>& column_values) {
  std::vector<Element> diag(perm.size(), kOne);
  for (std::size_t c = 0; c < perm.size(); ++c) diag.at(perm[c]) = column_values[c];
  return MonomialMatrix(std::move(field), std::move(perm), std::move(diag));
}

MonomialMatrix MonomialMatrix::from_dense(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::NotSquare, "monomial matrix must be square");
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::vector<Element> values(n);
  std::vector<bool> row_used(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t count = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      ++count;
      perm[c] = r;
      values[c] = m(r, c);
    }
    if (count != 1 || row_used[perm[c]]) fail(ErrorCode::NotMonomial, "matrix is not monomial");
    row_used[perm[c]] = true;
  }
  return from_columns(m.field(), std::move(perm), values);
}

bool MonomialMatrix::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i || diag_[i] != kOne) return false;
  return true;
}

Matrix MonomialMatrix::dense() const {
  Matrix m(field_, size(), size());
  for (std::size_t c = 0; c < size(); ++c) m(perm_[c], c) = column_value(c);
  return m;
}

MonomialMatrix MonomialMatrix::inverse() const {
  // M^{-1} has 1/value(c) at (c, tau(c)).
  const std::size_t n = size();
  std::vector<std::size_t> perm(n);
  std::vector<Element> values(n);
  for (std::size_t c = 0; c < n; ++c) {
    perm[perm_[c]] = c;
    values[perm_[c]] = field_->inv(column_value(c));
  }
  return from_columns(field_, std::move(perm), values);
}

MonomialMatrix MonomialMatrix::transpose() const {
  const std::size_t n = size();
  std::vector<std::size_t> perm(n);
  std::vector<Element> values(n);
  for (std::size_t c = 0; c < n; ++c) {
    perm[perm_[c]] = c;
    values[perm_[c]] = column_value(c);
  }
  return from_columns(field_, std::move(perm), values);
}

MonomialMatrix MonomialMatrix::frobenius(std::uint32_t s) const {
  std::vector<Element> diag(diag_.size());
  for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = field_->frobenius(diag_[i], s);
  return MonomialMatrix(field_, perm_, std::move(diag));
}

Vector MonomialMatrix::apply(std::span<const Element> v) const {
  if (v.size() != size()) fail(ErrorCode::Incompatible, "vector length does not match monomial size");
  Vector out(v.size());
  for (std::size_t c = 0; c < v.size(); ++c) out[c] = field_->mul(v[perm_[c]], diag_[perm_[c]]);
  return out;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.size() != b.size()) fail(ErrorCode::Incompatible, "monomial size mismatch");
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::vector<Element> values(n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t mid = b.perm_[c];
    perm[c] = a.perm_[mid];
    values[c] = a.field_->mul(a.column_value(mid), b.column_value(c));
  }
  return MonomialMatrix::from_columns(a.field_, std::move(perm), values);
}

bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
  return same_field(a.field_, b.field_) && a.perm_ == b.perm_ && a.diag_ == b.diag_;
}

MonomialMatrix kronecker(const MonomialMatrix& a, const MonomialMatrix& b) {
  require_same_field(a.field(), b.field());
  const std::size_t na = a.size(), nb = b.size();
  std::vector<std::size_t> perm(na * nb);
  std::vector<Element> diag(na * nb);
  for (std::size_t ca = 0; ca < na; ++ca)
    for (std::size_t cb = 0; cb < nb; ++cb) {
      const std::size_t r = a.row_of_column(ca) * nb + b.row_of_column(cb);
      perm[ca * nb + cb] = r;
      diag[r] = a.field()->mul(a.column_value(ca), b.column_value(cb));
    }
  return MonomialMatrix(a.field(), std::move(perm), std::move(diag));
}

SemilinearIsometry::SemilinearIsometry(MonomialMatrix mono, std::uint32_t s) : mono_(std::move(mono)), s_(s) {
  if (s_ < 1 || s_ > mono_.field()->e())
    fail(ErrorCode::InvalidExponent,
         "Frobenius exponent " + std::to_string(s_) + " outside 1.." + std::to_string(mono_.field()->e()));
}

SemilinearIsometry SemilinearIsometry::euclidean(FieldPtr field, std::size_t n) {
  const auto e = field->e();
  return SemilinearIsometry(MonomialMatrix::identity(std::move(field), n), e);
}

SemilinearIsometry SemilinearIsometry::galois(FieldPtr field, std::size_t n, std::uint32_t s) {
  return SemilinearIsometry(MonomialMatrix::identity(std::move(field), n), s);
}

}  // namespace sigmahull
