#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sigmahull/field.hpp"
#include "sigmahull/matrix.hpp"

namespace sigmahull {

/// n x n monomial matrix M = D * P, stored structurally.
///
/// perm holds tau (0-based) and P follows the row convention in which row
/// tau(i) of P is row i of the identity, so (t_1..t_n) P = (t_tau(1)..t_tau(n)).
/// diag holds D row by row, hence the single nonzero of column c sits in row
/// tau(c) and equals diag[tau(c)].
class MonomialMatrix {
 public:
  MonomialMatrix(FieldPtr field, std::vector<std::size_t> perm, std::vector<Element> diag);

  static MonomialMatrix identity(FieldPtr field, std::size_t n);
  static MonomialMatrix diagonal(FieldPtr field, std::vector<Element> diag);
  static MonomialMatrix permutation(FieldPtr field, std::vector<std::size_t> perm);
  /// Throws NotMonomial unless m has exactly one nonzero per row and column.
  static MonomialMatrix from_dense(const Matrix& m);

  const FieldPtr& field() const { return field_; }
  std::size_t size() const { return perm_.size(); }
  const std::vector<std::size_t>& perm() const { return perm_; }
  const std::vector<Element>& diag() const { return diag_; }

  std::size_t row_of_column(std::size_t c) const { return perm_[c]; }
  Element column_value(std::size_t c) const { return diag_[perm_[c]]; }

  bool is_identity() const;
  Matrix dense() const;
  MonomialMatrix inverse() const;
  MonomialMatrix transpose() const;
  MonomialMatrix frobenius(std::uint32_t s) const;

  /// v * M.
  Vector apply(std::span<const Element> v) const;

  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
  friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b);

 private:
  static MonomialMatrix from_columns(FieldPtr field, std::vector<std::size_t> perm,
                                     const std::vector<Element>& column_values);

  FieldPtr field_;
  std::vector<std::size_t> perm_;
  std::vector<Element> diag_;
};

/// Structural Kronecker product; the result is again monomial.
MonomialMatrix kronecker(const MonomialMatrix& a, const MonomialMatrix& b);

/// sigma = (tau, pi_s) acting as c -> pi_s(c) * M_tau.
class SemilinearIsometry {
 public:
  SemilinearIsometry(MonomialMatrix mono, std::uint32_t s);

  static SemilinearIsometry euclidean(FieldPtr field, std::size_t n);
  /// (I, s): the inner product sum a_i b_i^(p^s).
  static SemilinearIsometry galois(FieldPtr field, std::size_t n, std::uint32_t s);

  const MonomialMatrix& mono() const { return mono_; }
  std::uint32_t s() const { return s_; }
  std::size_t n() const { return mono_.size(); }
  const FieldPtr& field() const { return mono_.field(); }

  friend bool operator==(const SemilinearIsometry&, const SemilinearIsometry&) = default;

 private:
  MonomialMatrix mono_;
  std::uint32_t s_;
};

}  // namespace sigmahull
