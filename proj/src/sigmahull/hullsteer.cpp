#include "sigmahull/hullsteer.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sigmahull/budget.hpp"
#include "sigmahull/error.hpp"
#include "sigmahull/semilinear.hpp"

namespace sigmahull {
namespace {

MonomialMatrix frobenius_power(const MonomialMatrix& m, std::uint32_t s) {
  // pi_0 is the identity map.
  return s == 0 ? m : m.frobenius(s);
}

void require_large_field(const FieldPtr& field) {
  if (field->q() <= 2) fail(ErrorCode::FieldTooSmall, "hull steering needs q > 2");
}

bool use_exhaustive(const SearchOptions& options, std::uint64_t q, std::size_t n) {
  switch (options.mode) {
    case SearchMode::Exhaustive: return true;
    case SearchMode::Sampled: return false;
    case SearchMode::Auto: break;
  }
  return exhaustive_by_default(q, n);
}

template <typename Accept>
std::optional<std::pair<MonomialMatrix, std::uint64_t>> search(const FieldPtr& field, std::size_t n,
                                                               const SearchOptions& options, Accept accept) {
  const bool exhaustive = use_exhaustive(options, field->q(), n);
  MonomialCandidates candidates(field, n, exhaustive, options.seed);
  std::uint64_t trials = 0;
  while (auto candidate = candidates.next()) {
    if (!exhaustive && trials >= options.budget) break;
    ++trials;
    if (accept(*candidate)) return std::pair{std::move(*candidate), trials};
  }
  fail(ErrorCode::SearchExhausted, "no witness after " + std::to_string(trials) + " trials (" +
                                       (exhaustive ? "exhaustive" : "sampled") + " search)");
}

}  // namespace

MonomialMatrix conjugate_monomial(const MonomialMatrix& m, const MonomialMatrix& m_prime, std::uint32_t s) {
  if (m.size() != m_prime.size()) fail(ErrorCode::Incompatible, "monomial sizes differ");
  const std::uint32_t e = m.field()->e();
  if (s < 1 || s > e) fail(ErrorCode::InvalidExponent, "Frobenius exponent " + std::to_string(s) + " outside 1.." + std::to_string(e));
  MonomialMatrix result = frobenius_power(m * m_prime * m.inverse(), e - s);
  if (!(result.frobenius(s) * m == m * m_prime))
    fail(ErrorCode::FormulaMismatch, "pi_s(M'') M != M M' after conjugation");
  return result;
}

std::uint64_t monomial_count(std::uint64_t q, std::size_t n) {
  std::uint64_t count = saturating_pow(q - 1, n);
  for (std::size_t i = 2; i <= n; ++i) {
    if (count > UINT64_MAX / i) return UINT64_MAX;
    count *= i;
  }
  return count;
}

bool exhaustive_by_default(std::uint64_t q, std::size_t n) { return monomial_count(q, n) <= kExhaustiveLimit; }

MonomialCandidates::MonomialCandidates(FieldPtr field, std::size_t n, bool exhaustive, std::uint64_t seed)
    : field_(std::move(field)), n_(n), exhaustive_(exhaustive), rng_(seed), perm_(n), diag_(n, 1) {
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
}

std::optional<MonomialMatrix> MonomialCandidates::next() {
  const std::uint32_t q = field_->q();
  switch (phase_) {
    case Phase::Identity:
      phase_ = Phase::Perturb;
      return MonomialMatrix::identity(field_, n_);
    case Phase::Perturb:
      if (perturb_pos_ < n_ && perturb_val_ < q) {
        std::vector<Element> diag(n_, kOne);
        diag[perturb_pos_] = Element{perturb_val_};
        if (++perturb_val_ == q) {
          perturb_val_ = 2;
          ++perturb_pos_;
        }
        return MonomialMatrix::diagonal(field_, std::move(diag));
      }
      phase_ = exhaustive_ ? Phase::Enumerate : Phase::Random;
      return next();
    case Phase::Enumerate: {
      if (enumerate_started_) {
        // Diagonal counter over nonzero element indices, then next permutation.
        std::size_t i = n_;
        while (i-- > 0) {
          if (++diag_[i] < q) break;
          diag_[i] = 1;
        }
        if (i == static_cast<std::size_t>(-1) && !std::next_permutation(perm_.begin(), perm_.end())) {
          phase_ = Phase::Done;
          return std::nullopt;
        }
      }
      enumerate_started_ = true;
      std::vector<Element> diag(n_);
      for (std::size_t j = 0; j < n_; ++j) diag[j] = Element{diag_[j]};
      return MonomialMatrix(field_, perm_, std::move(diag));
    }
    case Phase::Random: {
      std::vector<std::size_t> perm(n_);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::shuffle(perm.begin(), perm.end(), rng_);
      std::uniform_int_distribution<std::uint32_t> pick(1, q - 1);
      std::vector<Element> diag(n_);
      for (auto& d : diag) d = Element{pick(rng_)};
      return MonomialMatrix(field_, std::move(perm), std::move(diag));
    }
    case Phase::Done: return std::nullopt;
  }
  return std::nullopt;
}

SteerResult steer_relative_hull(const LinearCode& c1, const LinearCode& c2, const SemilinearIsometry& sigma,
                                std::size_t h, const SearchOptions& options) {
  require_compatible(c1, c2);
  require_compatible(c1, sigma);
  require_large_field(c1.field());
  const std::size_t low = c1.k() > c2.k() ? c1.k() - c2.k() : 0;
  const std::size_t high = relative_hull_dim(c1, c2, sigma);
  if (h < low || h > high)
    fail(ErrorCode::TargetOutOfRange,
         "target " + std::to_string(h) + " outside [" + std::to_string(low) + ", " + std::to_string(high) + "]");

  std::optional<LinearCode> found;
  std::optional<MonomialMatrix> applied;
  auto hit = search(c1.field(), c1.n(), options, [&](const MonomialMatrix& m_prime) {
    MonomialMatrix m2 = conjugate_monomial(sigma.mono(), m_prime, sigma.s());
    LinearCode candidate = apply_monomial(c2, m2);
    if (relative_hull_dim(c1, candidate, sigma) != h) return false;
    found.emplace(std::move(candidate));
    applied.emplace(std::move(m2));
    return true;
  });
  return {std::move(*found), std::move(*applied), hit->second};
}

SteerResult steer_self_hull(const LinearCode& code, const SemilinearIsometry& sigma, std::size_t h,
                            const SearchOptions& options) {
  require_compatible(code, sigma);
  require_large_field(code.field());
  const std::size_t high = sigma_hull_dim(code, sigma);
  if (h > high)
    fail(ErrorCode::TargetOutOfRange, "target " + std::to_string(h) + " outside [0, " + std::to_string(high) + "]");

  std::optional<LinearCode> found;
  auto hit = search(code.field(), code.n(), options, [&](const MonomialMatrix& m) {
    LinearCode candidate = apply_monomial(code, m);
    if (sigma_hull_dim(candidate, sigma) != h) return false;
    found.emplace(std::move(candidate));
    return true;
  });
  return {std::move(*found), std::move(hit->first), hit->second};
}

std::set<std::size_t> reachable_relative_dims(const LinearCode& c1, const LinearCode& c2,
                                              const SemilinearIsometry& sigma) {
  require_compatible(c1, c2);
  require_compatible(c1, sigma);
  if (monomial_count(c1.q(), c1.n()) > kExhaustiveLimit)
    fail(ErrorCode::TooLarge, "monomial group too large for exhaustive enumeration");
  std::set<std::size_t> out;
  MonomialCandidates candidates(c1.field(), c1.n(), true, 0);
  while (auto m_prime = candidates.next()) {
    const MonomialMatrix m2 = conjugate_monomial(sigma.mono(), *m_prime, sigma.s());
    out.insert(relative_hull_dim(c1, apply_monomial(c2, m2), sigma));
  }
  return out;
}

std::set<std::size_t> reachable_self_hull_dims(const LinearCode& code, const SemilinearIsometry& sigma) {
  require_compatible(code, sigma);
  if (monomial_count(code.q(), code.n()) > kExhaustiveLimit)
    fail(ErrorCode::TooLarge, "monomial group too large for exhaustive enumeration");
  std::set<std::size_t> out;
  MonomialCandidates candidates(code.field(), code.n(), true, 0);
  while (auto m = candidates.next()) out.insert(sigma_hull_dim(apply_monomial(code, *m), sigma));
  return out;
}

}  // namespace sigmahull
