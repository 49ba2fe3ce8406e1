#include "primegauge/scan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace primegauge {

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::HL: return "HL";
        case ViolationKind::COROLLARY1: return "COROLLARY1";
        case ViolationKind::SUPERADD: return "SUPERADD";
        case ViolationKind::MULTI_SUPERADD: return "MULTI_SUPERADD";
        case ViolationKind::RATIO32: return "RATIO32";
        case ViolationKind::SUBSET_DEFECT: return "SUBSET_DEFECT";
    }
    return "UNKNOWN";
}

uint64_t diagonal_pair_count(uint64_t n) {
    if (n < 4) return 0;
    // sum over s in [4, n] of (floor(s/2) - 1) = floor(n^2/4) - n + 1
    return n * n / 4 - n + 1;
}

namespace {

struct ChunkResult {
    std::vector<ViolationRecord> violations;
    uint64_t pairs = 0;
};

// Sequential loop over chunks of outer values; each chunk is split into
// contiguous subranges processed in parallel and merged back in range
// order, so the emitted stream does not depend on the worker count.
// Checkpoints and the stop flag are honored at chunk boundaries.
ScanReport run_chunked(ViolationKind kind, uint64_t outer_lo, uint64_t outer_hi,
                       uint64_t engine_limit, const ScanOptions& opts,
                       uint64_t resumed_pairs,
                       const std::function<ChunkResult(uint64_t, uint64_t)>& worker) {
    ScanReport report;
    report.kind = kind;
    report.bound = outer_hi;
    report.cursor = opts.resume_cursor;
    report.pairs_checked = resumed_pairs;

    unsigned workers = opts.workers != 0 ? opts.workers : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    uint64_t chunk = std::max<uint64_t>(opts.chunk, 1);

    uint64_t start = std::max(outer_lo, opts.resume_cursor + 1);

    for (uint64_t c_lo = start; c_lo <= outer_hi; c_lo += chunk) {
        uint64_t c_hi = std::min(outer_hi, c_lo + chunk - 1);
        uint64_t span = c_hi - c_lo + 1;
        unsigned nthreads = static_cast<unsigned>(std::min<uint64_t>(workers, span));

        std::vector<ChunkResult> parts(nthreads);
        if (nthreads <= 1) {
            parts[0] = worker(c_lo, c_hi);
        } else {
            std::vector<std::thread> threads;
            threads.reserve(nthreads - 1);
            uint64_t per = span / nthreads, extra = span % nthreads, lo = c_lo;
            std::vector<std::pair<uint64_t, uint64_t>> ranges(nthreads);
            for (unsigned i = 0; i < nthreads; ++i) {
                uint64_t len = per + (i < extra ? 1 : 0);
                ranges[i] = {lo, lo + len - 1};
                lo += len;
            }
            for (unsigned i = 1; i < nthreads; ++i) {
                threads.emplace_back([&, i] { parts[i] = worker(ranges[i].first, ranges[i].second); });
            }
            parts[0] = worker(ranges[0].first, ranges[0].second);
            for (auto& t : threads) t.join();
        }

        for (auto& part : parts) {
            report.pairs_checked += part.pairs;
            for (auto& v : part.violations) {
                if (opts.sink) opts.sink(v);
                report.violations.push_back(std::move(v));
            }
        }
        report.cursor = c_hi;

        if (opts.on_checkpoint) {
            ScanCheckpoint ck;
            ck.scan_kind = std::string(to_string(kind));
            ck.bound = outer_hi;
            ck.cursor = c_hi;
            ck.violations_so_far = opts.resume_violations + report.violations.size();
            ck.config_fingerprint = opts.config_fingerprint;
            ck.engine_limit = engine_limit;
            opts.on_checkpoint(ck);
        }
        if (opts.stop != nullptr && opts.stop->load(std::memory_order_relaxed) && c_hi < outer_hi) {
            return report; // completed=false, cursor marks the resume point
        }
    }
    report.completed = true;
    return report;
}

} // namespace

ScanReport scan_hl(const PrimeTable& table, uint64_t n_max, const ScanOptions& opts) {
    if (n_max < 4) throw std::invalid_argument("scan_hl: n_max must be >= 4");
    if (n_max > table.limit()) throw std::out_of_range("scan_hl: n_max exceeds table limit");

    auto worker = [&table](uint64_t s_lo, uint64_t s_hi) {
        ChunkResult res;
        for (uint64_t s = s_lo; s <= s_hi; ++s) {
            const uint64_t pis = table.pi_unchecked(s);
            const uint64_t half = s / 2;
            uint64_t pix = 1;                              // pi(2)
            uint64_t piy = table.pi_unchecked(s - 2);
            res.pairs += half - 1;
            for (uint64_t x = 2; x <= half; ++x) {
                if (pix + piy < pis) {
                    res.violations.push_back({ViolationKind::HL, x, s - x, pis, pix + piy, {}});
                }
                pix += table.is_prime_unchecked(x + 1);
                piy -= table.is_prime_unchecked(s - x);
            }
        }
        return res;
    };
    uint64_t resumed_pairs = diagonal_pair_count(opts.resume_cursor);
    return run_chunked(ViolationKind::HL, 4, n_max, table.limit(), opts, resumed_pairs, worker);
}

ScanReport scan_corollary1(const PrimeTable& table, uint64_t p_max, const ScanOptions& opts) {
    if (p_max < 5) throw std::invalid_argument("scan_corollary1: p_max must be >= 5");
    if (p_max > table.limit()) throw std::out_of_range("scan_corollary1: p_max exceeds table limit");

    auto worker = [&table](uint64_t lo, uint64_t hi) {
        ChunkResult res;
        for (uint64_t p = std::max<uint64_t>(lo, 5); p <= hi; ++p) {
            if (!table.is_prime_unchecked(p)) continue;
            const uint64_t target = table.pi_unchecked(p - 1);
            uint64_t pix = 1;                              // pi(2)
            uint64_t piy = table.pi_unchecked(p - 2);
            res.pairs += p - 3;
            for (uint64_t x = 2; x <= p - 2; ++x) {
                if (pix + piy == target) {
                    res.violations.push_back({ViolationKind::COROLLARY1, x, p - x, target, pix + piy, {}});
                }
                pix += table.is_prime_unchecked(x + 1);
                piy -= table.is_prime_unchecked(p - x);
            }
        }
        return res;
    };
    // pairs_checked stays cumulative across resume: recount the x-ranges of
    // the primes already covered.
    uint64_t resumed_pairs = 0;
    if (opts.resume_cursor >= 5) {
        PrimeStream ps(table);
        while (ps.has_next()) {
            uint64_t p = ps.next();
            if (p > opts.resume_cursor) break;
            if (p >= 5) resumed_pairs += p - 3;
        }
    }
    return run_chunked(ViolationKind::COROLLARY1, 5, p_max, table.limit(), opts, resumed_pairs, worker);
}

ScanReport scan_superadditivity(const PrimeTable& table, uint64_t n_max, const ScanOptions& opts) {
    if (n_max < 4) throw std::invalid_argument("scan_superadditivity: n_max must be >= 4");
    if (n_max > table.prime_count()) {
        throw std::out_of_range("scan_superadditivity: table holds fewer than n_max primes");
    }
    const std::vector<uint64_t> primes = first_n_primes(table, n_max);
    auto nth = [&primes](uint64_t i) { return primes[i - 1]; };

    auto worker = [&nth](uint64_t s_lo, uint64_t s_hi) {
        ChunkResult res;
        for (uint64_t s = s_lo; s <= s_hi; ++s) {
            const uint64_t ps = nth(s);
            const uint64_t half = s / 2;
            res.pairs += half - 1;
            for (uint64_t a = 2; a <= half; ++a) {
                const uint64_t sum = nth(a) + nth(s - a);
                if (ps <= sum) {
                    res.violations.push_back({ViolationKind::SUPERADD, a, s - a, ps, sum, {}});
                }
            }
        }
        return res;
    };
    uint64_t resumed_pairs = diagonal_pair_count(opts.resume_cursor);
    return run_chunked(ViolationKind::SUPERADD, 4, n_max, table.limit(), opts, resumed_pairs, worker);
}

ScanReport scan_ratio_conjecture(const PrimeTable& table, uint64_t x_max, const ScanOptions& opts) {
    if (x_max < 1) throw std::invalid_argument("scan_ratio_conjecture: x_max must be >= 1");
    if (table.limit() < 2 * x_max - 1) {
        throw std::out_of_range("scan_ratio_conjecture: table limit below 2*x_max - 1");
    }

    auto worker = [&table](uint64_t lo, uint64_t hi) {
        ChunkResult res;
        uint64_t pia = table.pi_unchecked(lo - 1);      // pi(x-1)
        uint64_t pib = table.pi_unchecked(2 * lo - 1);  // pi(2x-1)
        for (uint64_t x = lo; x <= hi; ++x) {
            if (3 * pia > 2 * pib) {
                res.violations.push_back({ViolationKind::RATIO32, x, 0, 3 * pia, 2 * pib, {}});
            }
            if (x < hi) {
                pia += table.is_prime_unchecked(x);
                pib += table.is_prime_unchecked(2 * x) + table.is_prime_unchecked(2 * x + 1);
            }
        }
        res.pairs += hi - lo + 1;
        return res;
    };
    uint64_t resumed_pairs = opts.resume_cursor;
    return run_chunked(ViolationKind::RATIO32, 1, x_max, table.limit(), opts, resumed_pairs, worker);
}

std::string join_indices(std::span<const uint64_t> indices) {
    std::string out;
    for (size_t i = 0; i < indices.size(); ++i) {
        if (i > 0) out += ';';
        out += std::to_string(indices[i]);
    }
    return out;
}

MultiSuperAddResult check_multi_superadd(const PrimeIndex& index,
                                         std::span<const uint64_t> indices) {
    if (indices.size() < 2) {
        throw std::domain_error("check_multi_superadd: need at least two indices");
    }
    MultiSuperAddResult res;
    res.indices.assign(indices.begin(), indices.end());
    for (uint64_t a : indices) {
        if (a < 2) throw std::domain_error("check_multi_superadd: indices must be >= 2");
        res.sum_index += a;
    }
    if (res.sum_index > index.max_index()) {
        throw std::out_of_range("check_multi_superadd: index sum exceeds served range");
    }
    res.lhs = index.nth(res.sum_index);
    for (uint64_t a : indices) res.rhs += index.nth(a);
    res.holds = res.lhs > res.rhs;
    return res;
}

DefectResult compute_defect(std::span<const uint64_t> sequence, uint64_t n_max,
                            std::string_view sequence_name) {
    if (n_max < 4) throw std::invalid_argument("compute_defect: n_max must be >= 4");
    std::vector<uint64_t> member_bits((n_max >> 6) + 1, 0);
    uint64_t prev = 0;
    for (uint64_t v : sequence) {
        if (v <= prev && prev != 0) {
            throw std::domain_error("compute_defect: sequence is not strictly increasing");
        }
        if (v == 0) throw std::domain_error("compute_defect: sequence values must be positive");
        prev = v;
        if (v <= n_max) member_bits[v >> 6] |= uint64_t(1) << (v & 63);
    }
    auto member = [&member_bits](uint64_t v) -> uint64_t {
        return (member_bits[v >> 6] >> (v & 63)) & 1;
    };

    // count_f over [0, v] maintained incrementally: cs = count(s),
    // csm2 = count(s-2); within a diagonal cx = count(x), cy = count(s-x).
    uint64_t c2 = member(1) + member(2);
    uint64_t cs = c2 + member(3) + member(4);
    uint64_t csm2 = c2;

    DefectResult res;
    res.sequence_name = std::string(sequence_name);
    res.bound = n_max;
    int64_t best = INT64_MIN;
    for (uint64_t s = 4; s <= n_max; ++s) {
        uint64_t cx = c2;
        uint64_t cy = csm2;
        const uint64_t half = s / 2;
        for (uint64_t x = 2; x <= half; ++x) {
            int64_t v = static_cast<int64_t>(cs) - static_cast<int64_t>(cx) - static_cast<int64_t>(cy);
            if (v > best) {
                best = v;
                res.witness_x = x;
                res.witness_y = s - x;
            }
            cx += member(x + 1);
            cy -= member(s - x);
        }
        if (s < n_max) {
            cs += member(s + 1);
            csm2 += member(s - 1);
        }
    }
    res.defect = best;
    return res;
}

} // namespace primegauge
