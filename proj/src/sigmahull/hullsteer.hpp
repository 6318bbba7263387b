#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>

#include "sigmahull/code.hpp"
#include "sigmahull/monomial.hpp"

namespace sigmahull {

/// M'' = pi_{e-s}(M M' M^{-1}), which satisfies pi_s(M'') M = M M'. The
/// identity is re-checked on every call (FormulaMismatch if it fails).
MonomialMatrix conjugate_monomial(const MonomialMatrix& m, const MonomialMatrix& m_prime, std::uint32_t s);

enum class SearchMode { Auto, Exhaustive, Sampled };

struct SearchOptions {
  std::uint64_t budget = 10000;
  std::uint64_t seed = 0;
  SearchMode mode = SearchMode::Auto;
};

inline constexpr std::uint64_t kExhaustiveLimit = 1000000;

/// (q-1)^n * n!, saturating.
std::uint64_t monomial_count(std::uint64_t q, std::size_t n);
bool exhaustive_by_default(std::uint64_t q, std::size_t n);

/// Candidate monomial matrices in the fixed search order: identity, then
/// each single diagonal entry set to every other nonzero element (positions
/// ascending, element index ascending), then either every monomial matrix
/// (exhaustive) or seeded random ones.
class MonomialCandidates {
 public:
  MonomialCandidates(FieldPtr field, std::size_t n, bool exhaustive, std::uint64_t seed);

  std::optional<MonomialMatrix> next();

 private:
  enum class Phase { Identity, Perturb, Enumerate, Random, Done };

  FieldPtr field_;
  std::size_t n_;
  bool exhaustive_;
  std::mt19937_64 rng_;
  Phase phase_ = Phase::Identity;
  std::size_t perturb_pos_ = 0;
  std::uint32_t perturb_val_ = 2;
  std::vector<std::size_t> perm_;
  std::vector<std::uint32_t> diag_;
  bool enumerate_started_ = false;
};

struct SteerResult {
  LinearCode code;
  MonomialMatrix witness;  // the M'' applied to the input code
  std::uint64_t trials;
};

/// A code C2 M'' with dim(C1 ∩ (C2 M'')^{⊥σ}) = h. Candidates M' follow
/// MonomialCandidates and are turned into M'' with conjugate_monomial.
/// Errors: FieldTooSmall (q = 2), TargetOutOfRange, SearchExhausted.
SteerResult steer_relative_hull(const LinearCode& c1, const LinearCode& c2, const SemilinearIsometry& sigma,
                                std::size_t h, const SearchOptions& options = {});

/// A code C M with dim Hull_sigma(C M) = h, 0 <= h <= dim Hull_sigma(C).
SteerResult steer_self_hull(const LinearCode& code, const SemilinearIsometry& sigma, std::size_t h,
                            const SearchOptions& options = {});

/// Every value of dim(C1 ∩ (C2 M'')^{⊥σ}) over all monomial M''. Throws
/// TooLarge when the monomial group exceeds the exhaustive limit.
std::set<std::size_t> reachable_relative_dims(const LinearCode& c1, const LinearCode& c2,
                                              const SemilinearIsometry& sigma);
std::set<std::size_t> reachable_self_hull_dims(const LinearCode& code, const SemilinearIsometry& sigma);

}  // namespace sigmahull
