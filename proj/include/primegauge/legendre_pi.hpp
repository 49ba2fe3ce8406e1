#pragma once

#include <cstdint>

namespace primegauge {

inline constexpr uint64_t kDefaultCombinatorialCeiling = 100000000000ull; // 1e11

// Exact pi(x) by Legendre-style recursion over the ~2*sqrt(x) distinct
// values of floor(x/k), without materializing the primes up to x.
// Throws ResourceError when x exceeds the ceiling (state and runtime grow
// as sqrt(x) and x^(3/4)).
uint64_t pi_unbounded(uint64_t x, uint64_t ceiling = kDefaultCombinatorialCeiling);

} // namespace primegauge
