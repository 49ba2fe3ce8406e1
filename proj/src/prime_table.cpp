#include "primegauge/prime_table.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

namespace primegauge {

namespace {

uint64_t isqrt64(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Primes <= n by a plain odd-only sieve; only used for the base primes up
// to sqrt(limit), so n stays small.
std::vector<uint64_t> base_primes(uint64_t n) {
    std::vector<uint64_t> out;
    if (n < 2) return out;
    out.push_back(2);
    std::vector<uint8_t> comp((n >> 1) + 1, 0); // index i <-> 2i+1
    for (uint64_t i = 1; 2 * i + 1 <= n; ++i) {
        if (comp[i]) continue;
        uint64_t p = 2 * i + 1;
        out.push_back(p);
        for (uint64_t m = p * p; m <= n; m += 2 * p) comp[m >> 1] = 1;
    }
    return out;
}

// Popcount of bits_[lo..hi] inclusive.
uint64_t popcount_range(const std::vector<uint64_t>& bits, uint64_t lo, uint64_t hi) {
    uint64_t wl = lo >> 6, wh = hi >> 6;
    uint64_t ml = ~uint64_t(0) << (lo & 63);
    uint64_t mh = ~uint64_t(0) >> (63 - (hi & 63));
    if (wl == wh) return std::popcount(bits[wl] & ml & mh);
    uint64_t count = std::popcount(bits[wl] & ml) + std::popcount(bits[wh] & mh);
    for (uint64_t w = wl + 1; w < wh; ++w) count += std::popcount(bits[w]);
    return count;
}

} // namespace

uint64_t PrimeTable::estimated_bytes(uint64_t limit) {
    uint64_t bit_words = (limit >> 7) + 1;
    uint64_t blocks = (limit / kBlockNumbers) + 2;
    uint64_t materialized = std::min(limit, kMaterializeBelow) / 2; // conservative bound on pi(x)*4
    return bit_words * 8 + blocks * 8 + materialized;
}

uint64_t PrimeTable::limit_ceiling() {
    const char* env = std::getenv("PRIMEGAUGE_MEM_CEILING");
    if (env == nullptr || *env == '\0') return kDefaultLimitCeiling;
    uint64_t bytes = std::strtoull(env, nullptr, 10);
    // Largest limit whose estimated footprint fits in the given byte budget.
    uint64_t lo = 0, hi = uint64_t(1) << 40;
    while (lo < hi) {
        uint64_t mid = lo + (hi - lo + 1) / 2;
        if (estimated_bytes(mid) <= bytes) lo = mid; else hi = mid - 1;
    }
    return lo;
}

PrimeTable PrimeTable::build(uint64_t limit) {
    if (limit == 0) throw std::invalid_argument("build: limit must be >= 1");
    uint64_t ceiling = limit_ceiling();
    if (limit > ceiling) {
        throw ResourceError("build: limit " + std::to_string(limit) +
                            " exceeds engine ceiling " + std::to_string(ceiling) +
                            " (set PRIMEGAUGE_MEM_CEILING to raise it)");
    }

    PrimeTable t;
    t.limit_ = limit;
    uint64_t nbits = (limit >> 1) + 1;
    t.bits_.assign((nbits + 63) >> 6, 0);

    auto base = base_primes(isqrt64(limit));

    for (uint64_t lo = 0; lo <= limit; lo += kSegmentNumbers) {
        uint64_t hi = std::min(limit, lo + kSegmentNumbers - 1);
        // Candidate odd bits for [lo, hi] start all-set. bit_lo is word
        // aligned because kSegmentNumbers/128 is integral; the tail of the
        // last word past hi stays clear.
        uint64_t bit_lo = (lo + 1) >> 1;         // lo even: first odd is lo+1
        uint64_t bit_hi = ((hi + 1) >> 1) - 1;   // bit of the largest odd <= hi
        std::fill(t.bits_.begin() + (bit_lo >> 6), t.bits_.begin() + (bit_hi >> 6) + 1, ~uint64_t(0));
        if ((bit_hi & 63) != 63) t.bits_[bit_hi >> 6] &= ~uint64_t(0) >> (63 - (bit_hi & 63));
        for (uint64_t p : base) {
            if (p == 2) continue;
            uint64_t start = p * p;
            if (start > hi) break;
            if (start < lo) {
                start = lo + (p - lo % p) % p;
                if ((start & 1) == 0) start += p;
            }
            for (uint64_t m = start; m <= hi; m += 2 * p) {
                uint64_t b = m >> 1;
                t.bits_[b >> 6] &= ~(uint64_t(1) << (b & 63));
            }
        }
    }
    // 1 is not prime.
    t.bits_[0] &= ~uint64_t(1);

    // Block ranks: block_counts_[b] = number of primes < b*kBlockNumbers.
    uint64_t nblocks = limit / kBlockNumbers + 1;
    constexpr uint64_t words_per_block = kBlockNumbers / 128;
    t.block_counts_.assign(nblocks + 1, 0);
    uint64_t cum = (limit >= 2) ? 1 : 0; // the prime 2
    uint64_t w = 0;
    for (uint64_t b = 1; b <= nblocks; ++b) {
        uint64_t wend = std::min<uint64_t>(b * words_per_block, t.bits_.size());
        for (; w < wend; ++w) cum += std::popcount(t.bits_[w]);
        t.block_counts_[b] = cum;
    }
    for (; w < t.bits_.size(); ++w) cum += std::popcount(t.bits_[w]);
    t.prime_count_ = cum;

    uint64_t mat_limit = std::min(limit, kMaterializeBelow);
    t.small_primes_.reserve(mat_limit > 16 ? static_cast<size_t>(1.3 * mat_limit / std::log(double(mat_limit))) : 8);
    if (limit >= 2) t.small_primes_.push_back(2);
    for (uint64_t n = 3; n <= mat_limit; n += 2) {
        if (t.is_prime_unchecked(n)) t.small_primes_.push_back(static_cast<uint32_t>(n));
    }
    return t;
}

uint64_t PrimeTable::pi_unchecked(uint64_t x) const {
    if (x < 2) return 0;
    uint64_t b = x / kBlockNumbers;
    uint64_t count = block_counts_[b] + (b == 0 ? 1 : 0); // block ranks include 2, block 0 starts at it
    uint64_t bit_lo = (b == 0) ? 1 : (b * kBlockNumbers) >> 1;
    uint64_t bit_hi = (x - 1) >> 1;                       // largest odd <= x
    if (bit_hi >= bit_lo) count += popcount_range(bits_, bit_lo, bit_hi);
    return count;
}

uint64_t PrimeTable::nth_prime(uint64_t n) const {
    if (n < 1 || n > prime_count_) throw std::out_of_range("nth_prime: index out of range");
    if (n <= small_primes_.size()) return small_primes_[n - 1];
    if (n == 1) return 2;
    // Find the block whose cumulative count reaches n, then select within it.
    auto it = std::upper_bound(block_counts_.begin(), block_counts_.end(), n - 1);
    uint64_t b = static_cast<uint64_t>(it - block_counts_.begin()) - 1;
    uint64_t rank = n - block_counts_[b];          // 1-based rank inside block b
    if (b == 0) --rank;                            // 2 is rank 1 of block 0 and n > 1 here
    uint64_t w = (b * kBlockNumbers) >> 7;         // first word of the block
    for (;; ++w) {
        uint64_t word = bits_[w];
        uint64_t c = std::popcount(word);
        if (c >= rank) {
            while (--rank > 0) word &= word - 1;
            uint64_t bit = w * 64 + std::countr_zero(word);
            return 2 * bit + 1;
        }
        rank -= c;
    }
}

PrimeStream::PrimeStream(const PrimeTable& table)
    : table_(&table), words_(&table.words()) {
    if (table.limit() >= 2) {
        next_ = 2;
    }
}

uint64_t PrimeStream::next() {
    uint64_t p = next_;
    advance();
    return p;
}

void PrimeStream::advance() {
    while (pending_ == 0) {
        if (word_ix_ >= words_->size()) {
            next_ = 0;
            return;
        }
        pending_ = (*words_)[word_ix_++];
    }
    uint64_t bit = (word_ix_ - 1) * 64 + std::countr_zero(pending_);
    pending_ &= pending_ - 1;
    next_ = 2 * bit + 1;
}

uint64_t nth_prime_upper_bound(uint64_t n) {
    if (n < 6) return 13;
    double nn = static_cast<double>(n);
    double bound = nn * (std::log(nn) + std::log(std::log(nn)));
    return static_cast<uint64_t>(bound) + 1;
}

std::vector<uint64_t> first_n_primes(const PrimeTable& table, uint64_t n) {
    if (n > table.prime_count()) {
        throw std::out_of_range("first_n_primes: table holds only " +
                                std::to_string(table.prime_count()) + " primes, need " +
                                std::to_string(n));
    }
    std::vector<uint64_t> out;
    out.reserve(n);
    PrimeStream stream(table);
    for (uint64_t i = 0; i < n; ++i) out.push_back(stream.next());
    return out;
}

} // namespace primegauge
