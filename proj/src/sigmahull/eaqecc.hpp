#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigmahull/code.hpp"
#include "sigmahull/hullsteer.hpp"
#include "sigmahull/monomial.hpp"
#include "sigmahull/mpcode.hpp"

namespace sigmahull {

/// exact: brute-force or provably exact value. lower_bound: a formula bound.
/// unavailable: the code is zero or too large to enumerate.
enum class DistanceFlag { Exact, LowerBound, Unavailable };

std::string distance_flag_name(DistanceFlag flag);

struct Distance {
  std::size_t value = 0;
  DistanceFlag flag = DistanceFlag::Unavailable;

  bool operator==(const Distance&) const = default;
};

inline constexpr const char* kCertified = "certified";
inline constexpr const char* kUnrealized = "unrealized (search)";

/// [[n, k, d; c]]_q with bookkeeping.
struct EaqeccParams {
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  Distance d;
  std::size_t c = 0;
  std::optional<std::size_t> h;
  std::string provenance;
  std::string status = kCertified;
  /// Formula bound kept next to an exact value, when both exist.
  std::optional<std::size_t> bound;

  bool degenerate() const { return k == 0; }
  /// "[[n,k,d;c]]_q", with "·" for an unavailable distance.
  std::string notation() const;

  bool operator==(const EaqeccParams&) const = default;
};

struct EaqeccOptions {
  SearchOptions search;
  std::uint64_t distance_budget = 0;  // 0: enumeration_budget(kDistanceBudget)
};

/// Exact distance when the code is nonzero and q^k fits the budget.
Distance exact_distance(const LinearCode& code, std::uint64_t budget = 0);

/// [[n, k1+k2-n+c, min{d1,d2}; c]]_q, c = rank(H1 H2^T).
EaqeccParams eaqecc_from_pair(const LinearCode& c1, const LinearCode& c2, const EaqeccOptions& options = {});

/// The two records built from h = dim Hull_sigma(C); record (1)'s c is
/// cross-checked against eaqecc_from_pair(C, sigma(C)).
std::pair<EaqeccParams, EaqeccParams> eaqecc_from_hull(const LinearCode& code, const SemilinearIsometry& sigma,
                                                       const EaqeccOptions& options = {});

/// Both records for every h in 0..dim Hull_sigma(C), ordered by h. Each h is
/// realized by steer_self_hull; misses are kept with status "unrealized (search)".
std::vector<EaqeccParams> eaqecc_family(const LinearCode& code, const SemilinearIsometry& sigma,
                                        const EaqeccOptions& options = {});

/// MDS rows [[n,k-h,n-k+1;n-k-h]] and [[n,n-k-h,k+1;k-h]].
std::vector<EaqeccParams> eaqecc_family_mds(const LinearCode& code, const SemilinearIsometry& sigma,
                                            const EaqeccOptions& options = {});

/// Q1 and Q2 rows of the matrix-product construction for h in 0..H, with H
/// the summed block hull dimension. Distances are bounds min_i D_i(A) d_i and
/// min_i D_i(A) d'_{rho(i)}, replaced by exact values when enumerable.
std::vector<EaqeccParams> eaqecc_from_mp(const MatrixProductSpec& spec, const MpSigma& ms,
                                         const EaqeccOptions& options = {});

/// Sorts by (h, provenance); records without h come first.
void sort_records(std::vector<EaqeccParams>& records);

}  // namespace sigmahull
