#pragma once

#include <cstdint>

namespace sigmahull {

inline constexpr std::uint64_t kDistanceBudget = 1ull << 24;
inline constexpr std::uint64_t kOracleBudget = 531441;  // 3^12

/// SIGMAHULL_BUDGET, when set to a positive integer, replaces every default
/// enumeration budget.
std::uint64_t enumeration_budget(std::uint64_t fallback);

/// q^k, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t q, std::uint64_t k);

}  // namespace sigmahull
