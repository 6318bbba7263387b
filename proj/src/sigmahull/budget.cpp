#include "sigmahull/budget.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace sigmahull {

std::uint64_t enumeration_budget(std::uint64_t fallback) {
  const char* env = std::getenv("SIGMAHULL_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  return fallback;
}

std::uint64_t saturating_pow(std::uint64_t q, std::uint64_t k) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (q != 0 && out > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    out *= q;
  }
  return out;
}

}  // namespace sigmahull
