#pragma once

#include <cstddef>
#include <span>

#include "sigmahull/code.hpp"
#include "sigmahull/matrix.hpp"
#include "sigmahull/monomial.hpp"

namespace sigmahull {

/// pi_s(v) * M_tau.
Vector sigma_apply(const SemilinearIsometry& sigma, std::span<const Element> v);
/// <a, b>_sigma = sum_i a_i * sigma(b)_i.
Element sigma_inner(std::span<const Element> a, std::span<const Element> b, const SemilinearIsometry& sigma);

/// Row-wise sigma image pi_s(G) * M_tau.
Matrix sigma_image(const Matrix& g, const SemilinearIsometry& sigma);
/// The code sigma(C).
LinearCode sigma_image_code(const LinearCode& code, const SemilinearIsometry& sigma);

/// C^{⊥σ}, generated by pi_s(H) (M_tau^{-1})^T.
LinearCode sigma_dual(const LinearCode& code, const SemilinearIsometry& sigma);

/// Both rank expressions for one dimension; they must coincide.
struct RankForms {
  std::size_t via_parity;
  std::size_t via_generator;
};

/// dim(C1 ∩ C2^{⊥σ}) as n - k2 - rank(H1 M^{-1} pi_s(H2)^T) and
/// k1 - rank(pi_s(G2) M G1^T).
RankForms relative_hull_forms(const LinearCode& c1, const LinearCode& c2, const SemilinearIsometry& sigma);
/// dim((C1^{⊥σ})^{⊥σ} ∩ C2^{⊥σ}) as n - k2 - rank(H2 M^{-1} pi_s(H1)^T) and
/// k1 - rank(pi_s(G1) M G2^T).
RankForms bidual_relative_forms(const LinearCode& c1, const LinearCode& c2, const SemilinearIsometry& sigma);
/// dim Hull_sigma(C) as n - k - rank(H M^{-1} pi_s(H)^T) and k - rank(pi_s(G) M G^T).
RankForms hull_forms(const LinearCode& code, const SemilinearIsometry& sigma);

/// The checked variants throw FormulaMismatch if the two forms ever differ.
std::size_t relative_hull_dim(const LinearCode& c1, const LinearCode& c2, const SemilinearIsometry& sigma);
std::size_t bidual_relative_dim(const LinearCode& c1, const LinearCode& c2, const SemilinearIsometry& sigma);
std::size_t sigma_hull_dim(const LinearCode& code, const SemilinearIsometry& sigma);

struct HullResult {
  std::size_t dim;
  Matrix basis;  // rows span C ∩ C^{⊥σ}, in RREF
};

/// Dimension from the rank formula, basis from the kernel of the stacked
/// system [G; D] where D generates C^{⊥σ}.
HullResult sigma_hull(const LinearCode& code, const SemilinearIsometry& sigma);

void require_compatible(const LinearCode& code, const SemilinearIsometry& sigma);

/// X * M for a monomial M, row by row.
Matrix right_multiply(const Matrix& x, const MonomialMatrix& m);

}  // namespace sigmahull
