#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sigmahull/budget.hpp"
#include "sigmahull/code.hpp"
#include "sigmahull/monomial.hpp"

// Brute-force ground truth. Nothing here goes through the parity-check rank
// formulas or the pi_s(H)(M^{-1})^T dual generator; duals come from solving
// <a, g>_sigma = 0 against the images sigma(g) and intersections are counted
// by walking codewords.
namespace sigmahull::oracle {

std::uint64_t default_budget();

std::vector<Vector> enumerate_codewords(const LinearCode& code);
std::vector<Vector> enumerate_codewords(const LinearCode& code, std::uint64_t budget);

/// Basis of {a : <a, g>_sigma = 0 for every generator row g}.
Matrix sigma_dual_basis(const LinearCode& code, const SemilinearIsometry& sigma);
LinearCode sigma_dual(const LinearCode& code, const SemilinearIsometry& sigma);

bool in_sigma_dual(std::span<const Element> x, const LinearCode& code, const SemilinearIsometry& sigma);

/// Exact log_q of a subspace size; throws FormulaMismatch when count is not a
/// power of q.
std::size_t log_q_exact(std::uint64_t count, std::uint64_t q);

/// |C ∩ C^{⊥σ}| measured by enumeration, as a dimension.
std::size_t sigma_hull_dim(const LinearCode& code, const SemilinearIsometry& sigma);
std::size_t relative_dim(const LinearCode& c1, const LinearCode& c2, const SemilinearIsometry& sigma);
/// dim((C1^{⊥σ})^{⊥σ} ∩ C2^{⊥σ}).
std::size_t bidual_relative_dim(const LinearCode& c1, const LinearCode& c2, const SemilinearIsometry& sigma);
std::size_t intersection_dim(const LinearCode& c1, const LinearCode& c2);

/// inner ⊆ outer, checked codeword by codeword over inner, or over the
/// Euclidean annihilator of outer when that set is smaller.
bool subset(const LinearCode& inner, const LinearCode& outer);
bool equal(const LinearCode& a, const LinearCode& b);

}  // namespace sigmahull::oracle
