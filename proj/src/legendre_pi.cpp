#include "primegauge/legendre_pi.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "primegauge/errors.hpp"

namespace primegauge {

namespace {

uint64_t isqrt64(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

// Two arrays carry the running counts S(v) = |{2..v not struck by primes
// sieved so far}| + (number of primes sieved): small_[v] for v <= r and
// large_[i] = S(x/i) for i <= r, r = floor(sqrt(x)). Sieving prime p
// updates every S(v) with v >= p^2 by the count of newly struck multiples,
// S(v/p) - S(p-1). After all p <= r the survivors are exactly the primes,
// so large_[1] = pi(x).
uint64_t pi_unbounded(uint64_t x, uint64_t ceiling) {
    if (x > ceiling) {
        throw ResourceError("pi_unbounded: x " + std::to_string(x) +
                            " exceeds combinatorial ceiling " + std::to_string(ceiling));
    }
    if (x < 2) return 0;

    const uint64_t r = isqrt64(x);
    std::vector<uint64_t> small(r + 1);
    std::vector<uint64_t> large(r + 1);
    for (uint64_t v = 1; v <= r; ++v) small[v] = v - 1;
    for (uint64_t i = 1; i <= r; ++i) large[i] = x / i - 1;

    for (uint64_t p = 2; p <= r; ++p) {
        if (small[p] == small[p - 1]) continue; // p already struck, not prime
        const uint64_t sp = small[p - 1];
        const uint64_t p2 = p * p;
        const uint64_t imax = std::min(r, x / p2);
        for (uint64_t i = 1; i <= imax; ++i) {
            const uint64_t d = i * p;
            const uint64_t term = (d <= r) ? large[d] : small[x / d];
            large[i] -= term - sp;
        }
        for (uint64_t v = r; v >= p2; --v) {
            small[v] -= small[v / p] - sp;
        }
    }
    return large[1];
}

} // namespace primegauge
