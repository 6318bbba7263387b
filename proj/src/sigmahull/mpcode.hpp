#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sigmahull/code.hpp"
#include "sigmahull/matrix.hpp"
#include "sigmahull/monomial.hpp"

namespace sigmahull {

/// Matrix-product code [C_1, ..., C_k] * A for a k x t defining matrix A of
/// rank k and constituents of a common length n.
class MatrixProductSpec {
 public:
  /// Throws DegenerateDefiningMatrix when rank(A) < k, Incompatible when the
  /// constituents disagree on length or field or their count is not k.
  MatrixProductSpec(Matrix a, std::vector<LinearCode> constituents);

  const Matrix& defining_matrix() const { return a_; }
  const std::vector<LinearCode>& constituents() const { return constituents_; }
  const FieldPtr& field() const { return a_.field(); }
  std::size_t k() const { return a_.rows(); }
  std::size_t t() const { return a_.cols(); }
  std::size_t n() const { return constituents_.front().n(); }
  std::size_t length() const { return t() * n(); }
  std::size_t dimension() const;
  bool square() const { return k() == t(); }

 private:
  Matrix a_;
  std::vector<LinearCode> constituents_;
};

/// Rows a_i ⊗ G_i stacked in order.
Matrix mp_generator(const MatrixProductSpec& spec);
LinearCode mp_code(const MatrixProductSpec& spec);

/// pi_s(A) M A^T = D P_rho, recorded per column: the only nonzero of column
/// j lies in row rho[j] and equals alphas[j].
struct RhoMonomialWitness {
  std::vector<std::size_t> rho;
  std::vector<Element> alphas;

  MonomialMatrix as_monomial(const FieldPtr& field) const;
  Matrix reconstruct(const FieldPtr& field) const { return as_monomial(field).dense(); }
};

/// Throws NotSquare for non-square A. Returns nullopt when the product is not
/// monomial.
std::optional<RhoMonomialWitness> rho_monomial_check(const Matrix& a, const MonomialMatrix& tau_hat, std::uint32_t s);

/// sigma on F_q^{kn} with M = M_hat ⊗ M_tilde, and sigma~ = (tau_tilde, pi_s).
struct MpSigma {
  MonomialMatrix tau_hat;
  MonomialMatrix tau_tilde;
  std::uint32_t s;

  SemilinearIsometry assembled() const;
  SemilinearIsometry constituent() const;
};

/// Witness for (spec, ms) or PreconditionFailed / NotSquare / Incompatible.
RhoMonomialWitness require_rho_monomial(const MatrixProductSpec& spec, const MpSigma& ms);

/// Per-block terms dim(C_i ∩ C_{rho(i)}^{⊥σ~}).
std::vector<std::size_t> mp_hull_terms(const MatrixProductSpec& spec, const MpSigma& ms);
std::size_t mp_hull_dim(const MatrixProductSpec& spec, const MpSigma& ms);
bool is_sigma_dual_containing(const MatrixProductSpec& spec, const MpSigma& ms);
bool is_sigma_self_orthogonal(const MatrixProductSpec& spec, const MpSigma& ms);
/// [C_{rho(1)}^{⊥σ~}, ..., C_{rho(k)}^{⊥σ~}] * A.
MatrixProductSpec mp_sigma_dual(const MatrixProductSpec& spec, const MpSigma& ms);

/// D_i(A): minimum distance of the length-t code spanned by the first i rows.
std::vector<std::size_t> row_span_distances(const Matrix& a);
/// Every i x i minor of the first i rows is nonzero, for all i.
bool is_nonsingular_by_columns(const Matrix& a);

}  // namespace sigmahull
