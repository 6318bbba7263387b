#include "sigmahull/eaqecc.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "sigmahull/budget.hpp"
#include "sigmahull/error.hpp"
#include "sigmahull/semilinear.hpp"

namespace sigmahull {
namespace {

std::uint64_t distance_budget(const EaqeccOptions& options) {
  return options.distance_budget != 0 ? options.distance_budget : enumeration_budget(kDistanceBudget);
}

EaqeccParams record(std::uint32_t q, std::size_t n, std::size_t k, Distance d, std::size_t c, std::optional<std::size_t> h,
                    std::string provenance) {
  EaqeccParams r;
  r.q = q;
  r.n = n;
  r.k = k;
  r.d = d;
  r.c = c;
  r.h = h;
  r.provenance = std::move(provenance);
  return r;
}

void require_large_field(const FieldPtr& field) {
  if (field->q() <= 2) fail(ErrorCode::FieldTooSmall, "EAQECC families need q > 2");
}

// Whether a code with the requested hull dimension was found.
bool realize(const LinearCode& code, const SemilinearIsometry& sigma, std::size_t h, const SearchOptions& search,
             std::optional<LinearCode>* out = nullptr) {
  try {
    auto hit = steer_self_hull(code, sigma, h, search);
    if (out != nullptr) out->emplace(std::move(hit.code));
    return true;
  } catch (const Error& err) {
    if (err.code() == ErrorCode::SearchExhausted) return false;
    throw;
  }
}

Distance min_of(Distance a, Distance b) {
  if (a.flag == DistanceFlag::Unavailable || b.flag == DistanceFlag::Unavailable) return {};
  return {std::min(a.value, b.value), a.flag == DistanceFlag::Exact && b.flag == DistanceFlag::Exact
                                          ? DistanceFlag::Exact
                                          : DistanceFlag::LowerBound};
}

// min_i D_i(A) * dist(codes[i]) over the nonzero codes.
std::optional<std::size_t> mp_bound(const std::vector<std::size_t>& row_dists, const std::vector<LinearCode>& codes,
                                    std::uint64_t budget) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (codes[i].is_zero()) continue;
    const Distance d = exact_distance(codes[i], budget);
    if (d.flag != DistanceFlag::Exact) return std::nullopt;
    const std::size_t term = row_dists[i] * d.value;
    best = best ? std::min(*best, term) : term;
  }
  return best;
}

Distance bound_or_exact(const LinearCode& assembled, std::optional<std::size_t> bound, std::uint64_t budget) {
  const Distance exact = exact_distance(assembled, budget);
  if (exact.flag == DistanceFlag::Exact) return exact;
  if (assembled.is_zero() || !bound) return {};
  return {*bound, DistanceFlag::LowerBound};
}

}  // namespace

std::string distance_flag_name(DistanceFlag flag) {
  switch (flag) {
    case DistanceFlag::Exact: return "exact";
    case DistanceFlag::LowerBound: return "lower_bound";
    case DistanceFlag::Unavailable: return "unavailable";
  }
  return "unavailable";
}

std::string EaqeccParams::notation() const {
  std::string dist = d.flag == DistanceFlag::Unavailable ? "·" : std::to_string(d.value);
  if (d.flag == DistanceFlag::LowerBound) dist = ">=" + dist;
  return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + dist + ";" + std::to_string(c) + "]]_" +
         std::to_string(q);
}

Distance exact_distance(const LinearCode& code, std::uint64_t budget) {
  if (budget == 0) budget = enumeration_budget(kDistanceBudget);
  if (code.is_zero() || saturating_pow(code.q(), code.k()) > budget) return {};
  return {min_distance(code, budget), DistanceFlag::Exact};
}

EaqeccParams eaqecc_from_pair(const LinearCode& c1, const LinearCode& c2, const EaqeccOptions& options) {
  require_compatible(c1, c2);
  const std::size_t n = c1.n();
  const std::size_t c = rank(c1.parity_check() * c2.parity_check().transpose());
  if (c1.k() + c2.k() + c < n) fail(ErrorCode::FormulaMismatch, "negative logical dimension");
  const std::uint64_t budget = distance_budget(options);
  const Distance d = min_of(exact_distance(c1, budget), exact_distance(c2, budget));
  return record(c1.q(), n, c1.k() + c2.k() + c - n, d, c, std::nullopt, "pair");
}

std::pair<EaqeccParams, EaqeccParams> eaqecc_from_hull(const LinearCode& code, const SemilinearIsometry& sigma,
                                                       const EaqeccOptions& options) {
  require_compatible(code, sigma);
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const std::size_t h = sigma_hull_dim(code, sigma);
  const std::uint64_t budget = distance_budget(options);

  const EaqeccParams via_pair = eaqecc_from_pair(code, sigma_image_code(code, sigma), options);
  if (via_pair.c != n - k - h || via_pair.k != k - h)
    fail(ErrorCode::FormulaMismatch, "entanglement count from the code pair disagrees with n - k - h");

  auto first = record(code.q(), n, k - h, exact_distance(code, budget), n - k - h, h, "hull:1");
  auto second = record(code.q(), n, n - k - h, exact_distance(sigma_dual(code, sigma), budget), k - h, h, "hull:2");
  return {std::move(first), std::move(second)};
}

std::vector<EaqeccParams> eaqecc_family(const LinearCode& code, const SemilinearIsometry& sigma,
                                        const EaqeccOptions& options) {
  require_compatible(code, sigma);
  require_large_field(code.field());
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const std::size_t top = sigma_hull_dim(code, sigma);
  const std::uint64_t budget = distance_budget(options);
  const Distance d = exact_distance(code, budget);
  // Monomial equivalence preserves the distance of the sigma dual.
  const Distance d_dual = exact_distance(sigma_dual(code, sigma), budget);

  std::vector<EaqeccParams> out;
  for (std::size_t h = 0; h <= top; ++h) {
    std::optional<LinearCode> steered;
    const bool found = realize(code, sigma, h, options.search, &steered);
    auto first = record(code.q(), n, k - h, d, n - k - h, h, "family:1");
    auto second = record(code.q(), n, n - k - h, d_dual, k - h, h, "family:2");
    if (found) {
      const Distance check = exact_distance(sigma_dual(*steered, sigma), budget);
      if (check.flag == DistanceFlag::Exact && d_dual.flag == DistanceFlag::Exact && check.value != d_dual.value)
        fail(ErrorCode::FormulaMismatch, "steered sigma dual changed distance");
    } else {
      first.status = second.status = kUnrealized;
    }
    out.push_back(std::move(first));
    out.push_back(std::move(second));
  }
  return out;
}

std::vector<EaqeccParams> eaqecc_family_mds(const LinearCode& code, const SemilinearIsometry& sigma,
                                            const EaqeccOptions& options) {
  require_compatible(code, sigma);
  require_large_field(code.field());
  if (!is_mds(code)) fail(ErrorCode::NotMds, code.params() + " is not MDS");
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const std::size_t top = sigma_hull_dim(code, sigma);
  const std::uint64_t budget = distance_budget(options);

  const Distance dual_bf = exact_distance(sigma_dual(code, sigma), budget);
  if (dual_bf.flag == DistanceFlag::Exact && dual_bf.value != k + 1)
    fail(ErrorCode::FormulaMismatch, "sigma-dual of an MDS code has distance " + std::to_string(dual_bf.value) +
                                         ", expected " + std::to_string(k + 1));
  const Distance d{n - k + 1, DistanceFlag::Exact};
  const Distance d_dual = k == n ? Distance{} : Distance{k + 1, DistanceFlag::Exact};

  std::vector<EaqeccParams> out;
  for (std::size_t h = 0; h <= top; ++h) {
    const bool found = realize(code, sigma, h, options.search);
    auto first = record(code.q(), n, k - h, d, n - k - h, h, "mds:1");
    auto second = record(code.q(), n, n - k - h, d_dual, k - h, h, "mds:2");
    if (!found) first.status = second.status = kUnrealized;
    out.push_back(std::move(first));
    out.push_back(std::move(second));
  }
  return out;
}

std::vector<EaqeccParams> eaqecc_from_mp(const MatrixProductSpec& spec, const MpSigma& ms,
                                         const EaqeccOptions& options) {
  require_large_field(spec.field());
  const RhoMonomialWitness w = require_rho_monomial(spec, ms);
  const std::size_t top = mp_hull_dim(spec, ms);
  const std::size_t length = spec.length();
  const std::size_t sum_t = spec.dimension();
  const std::uint64_t budget = distance_budget(options);
  const std::vector<std::size_t> row_dists = row_span_distances(spec.defining_matrix());

  const SemilinearIsometry tilde = ms.constituent();
  std::vector<LinearCode> dual_constituents;
  for (std::size_t i = 0; i < spec.k(); ++i) dual_constituents.push_back(sigma_dual(spec.constituents()[w.rho[i]], tilde));

  const LinearCode assembled = mp_code(spec);
  const LinearCode assembled_dual = mp_code(mp_sigma_dual(spec, ms));
  const auto bound1 = mp_bound(row_dists, spec.constituents(), budget);
  const auto bound2 = mp_bound(row_dists, dual_constituents, budget);
  const Distance d1 = bound_or_exact(assembled, bound1, budget);
  const Distance d2 = bound_or_exact(assembled_dual, bound2, budget);
  const SemilinearIsometry sigma = ms.assembled();

  std::vector<EaqeccParams> out;
  for (std::size_t h = 0; h <= top; ++h) {
    const bool found = realize(assembled, sigma, h, options.search);
    auto first = record(spec.field()->q(), length, sum_t - h, d1, length - sum_t - h, h, "mp:Q1");
    auto second = record(spec.field()->q(), length, length - sum_t - h, d2, sum_t - h, h, "mp:Q2");
    first.bound = bound1;
    second.bound = bound2;
    if (!found) first.status = second.status = kUnrealized;
    out.push_back(std::move(first));
    out.push_back(std::move(second));
  }
  return out;
}

void sort_records(std::vector<EaqeccParams>& records) {
  std::stable_sort(records.begin(), records.end(), [](const EaqeccParams& a, const EaqeccParams& b) {
    const auto ha = a.h ? static_cast<long long>(*a.h) : -1;
    const auto hb = b.h ? static_cast<long long>(*b.h) : -1;
    return std::tie(ha, a.provenance) < std::tie(hb, b.provenance);
  });
}

}  // namespace sigmahull
