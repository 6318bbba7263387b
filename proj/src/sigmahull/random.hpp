#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "sigmahull/code.hpp"
#include "sigmahull/matrix.hpp"
#include "sigmahull/monomial.hpp"
#include "sigmahull/mpcode.hpp"

// Seeded instance generators shared by the verification campaigns and tests.
namespace sigmahull::gen {

using Rng = std::mt19937_64;

Element element(const Field& field, Rng& rng);
Element nonzero_element(const Field& field, Rng& rng);
Matrix matrix(const FieldPtr& field, std::size_t rows, std::size_t cols, Rng& rng);
Matrix invertible(const FieldPtr& field, std::size_t n, Rng& rng);

/// A uniformly random [n,k] code (rejection on rank).
LinearCode code(const FieldPtr& field, std::size_t n, std::size_t k, Rng& rng);
/// k drawn uniformly from lo..hi first.
LinearCode code_in_range(const FieldPtr& field, std::size_t n, std::size_t lo, std::size_t hi, Rng& rng);
/// A different generator for the same code: T * G with T invertible.
Matrix rebased_generator(const LinearCode& code, Rng& rng);

/// A code of dimension at most k whose sigma hull contains a self-orthogonal
/// subspace of dimension up to h (fewer if sampling stalls), so that hull
/// dimensions away from zero show up in random batteries.
LinearCode code_with_hull(const FieldPtr& field, std::size_t n, std::size_t k, std::size_t h,
                          const SemilinearIsometry& sigma, Rng& rng);

MonomialMatrix monomial(const FieldPtr& field, std::size_t n, Rng& rng);
/// Random monomial part and s uniform in 1..e.
SemilinearIsometry sigma(const FieldPtr& field, std::size_t n, Rng& rng);

struct MpInstance {
  MatrixProductSpec spec;
  MpSigma sigma;
};

/// A square k x k defining matrix and M_hat with pi_s(A) M_hat A^T monomial,
/// found by rejection sampling over A (fresh M_hat every `per_hat` draws), with
/// random constituents of length n. nullopt after max_tries draws.
std::optional<MpInstance> mp_instance(const FieldPtr& field, std::size_t k, std::size_t n, Rng& rng,
                                      std::size_t max_tries = 200000, std::size_t per_hat = 2000);

LinearCode code_sum(const LinearCode& a, const LinearCode& b);
LinearCode code_intersection(const LinearCode& a, const LinearCode& b);

/// Enlarges constituents (C_i += C_{rho(i)}^{⊥σ~}) until the MP code is
/// sigma dual-containing.
MpInstance make_dual_containing(MpInstance inst);
/// Shrinks constituents (C_i ∩= C_{rho(i)}^{⊥σ~}) until the MP code is
/// sigma self-orthogonal.
MpInstance make_self_orthogonal(MpInstance inst);

}  // namespace sigmahull::gen
