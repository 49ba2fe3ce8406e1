#pragma once

#include <cstdint>
#include <vector>

#include "primegauge/errors.hpp"

namespace primegauge {

// Exact primality / prime-counting / nth-prime queries over [0, limit].
//
// Storage layout: one bit per odd number, bit i <-> 2i+1, set = prime
// (the bit for 1 is cleared, 2 is handled separately). Blocks of
// kBlockNumbers numbers give O(1)-amortized rank: block_counts_[b] is the
// number of primes below b*kBlockNumbers, so pi(x) is one array read plus a
// popcount over at most kBlockNumbers/128 words.
//
// Construction sieves segments of kSegmentNumbers directly into the output
// bitmap, so transient memory beyond the table itself is just the base
// primes up to sqrt(limit).
//
// Immutable after build(); safe to share across threads.
class PrimeTable {
public:
    static constexpr uint64_t kBlockNumbers = 4096;     // power of two, 32 words of odd bits
    static constexpr uint64_t kSegmentNumbers = 1 << 20;
    static constexpr uint64_t kDefaultLimitCeiling = uint64_t(1) << 31;
    static constexpr uint64_t kMaterializeBelow = 1000000; // primes below this are kept as a flat array

    // Sieves [0, limit]. Throws std::invalid_argument for limit = 0 and
    // ResourceError when limit exceeds the configured ceiling (see
    // limit_ceiling()).
    static PrimeTable build(uint64_t limit);

    uint64_t limit() const { return limit_; }
    uint64_t prime_count() const { return prime_count_; }

    // True iff n is prime. Throws std::out_of_range for n > limit.
    bool is_prime(uint64_t n) const {
        if (n > limit_) throw std::out_of_range("is_prime: n out of sieved range");
        return is_prime_unchecked(n);
    }

    // Unchecked variant for hot loops; requires n <= limit.
    bool is_prime_unchecked(uint64_t n) const {
        if ((n & 1) == 0) return n == 2;
        uint64_t i = n >> 1;
        return (bits_[i >> 6] >> (i & 63)) & 1;
    }

    // Number of primes <= x. Throws std::out_of_range for x > limit.
    uint64_t pi(uint64_t x) const {
        if (x > limit_) throw std::out_of_range("pi: x out of sieved range");
        return pi_unchecked(x);
    }

    // Unchecked rank; requires x <= limit.
    uint64_t pi_unchecked(uint64_t x) const;

    // The n-th prime, 1-based (nth_prime(1) = 2). Throws std::out_of_range
    // unless 1 <= n <= prime_count().
    uint64_t nth_prime(uint64_t n) const;

    // Effective limit ceiling: kDefaultLimitCeiling, or derived from the
    // PRIMEGAUGE_MEM_CEILING environment variable (bytes) when set.
    static uint64_t limit_ceiling();

    // Approximate table footprint in bytes for a given limit.
    static uint64_t estimated_bytes(uint64_t limit);

    const std::vector<uint64_t>& words() const { return bits_; }

private:
    PrimeTable() = default;

    uint64_t limit_ = 0;
    uint64_t prime_count_ = 0;
    std::vector<uint64_t> bits_;
    std::vector<uint64_t> block_counts_;   // size nblocks+1, block_counts_[b] = pi(b*kBlockNumbers - 1)
    std::vector<uint32_t> small_primes_;   // primes <= min(limit, kMaterializeBelow)
};

// Forward iteration over the primes of a table in increasing order.
class PrimeStream {
public:
    explicit PrimeStream(const PrimeTable& table);

    // True while another prime <= limit is available.
    bool has_next() const { return next_ != 0; }

    // Returns the current prime and advances.
    uint64_t next();

private:
    void advance();

    const PrimeTable* table_;
    const std::vector<uint64_t>* words_;
    uint64_t next_ = 0;      // 0 when exhausted
    uint64_t word_ix_ = 0;
    uint64_t pending_ = 0;   // remaining set bits of words_[word_ix_ - 1]
};

// 1-based indexed access p_1 = 2, p_2 = 3, p_3 = 5, ... backed by a table.
class PrimeIndex {
public:
    explicit PrimeIndex(const PrimeTable& table) : table_(&table) {}

    uint64_t max_index() const { return table_->prime_count(); }
    uint64_t nth(uint64_t n) const { return table_->nth_prime(n); }

    const PrimeTable& table() const { return *table_; }

private:
    const PrimeTable* table_;
};

// Upper bound for p_n (Rosser-type: n(ln n + ln ln n) for n >= 6), used to
// size tables that must serve indices up to n.
uint64_t nth_prime_upper_bound(uint64_t n);

// First n primes of the table, materialized. Throws std::out_of_range when
// the table holds fewer than n primes.
std::vector<uint64_t> first_n_primes(const PrimeTable& table, uint64_t n);

} // namespace primegauge
