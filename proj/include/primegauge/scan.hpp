#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "primegauge/checkpoint.hpp"
#include "primegauge/prime_table.hpp"

namespace primegauge {

enum class ViolationKind { HL, COROLLARY1, SUPERADD, MULTI_SUPERADD, RATIO32, SUBSET_DEFECT };

std::string_view to_string(ViolationKind kind);

// One witness that a checked claim fails. lhs and rhs are both sides of
// the claim, recomputable from (kind, x, y):
//   HL            pi(x+y) <= pi(x)+pi(y)        violated when lhs >  rhs
//   COROLLARY1    pi(x+y-1) != pi(x)+pi(y)      violated when lhs == rhs
//   SUPERADD      p_{x+y} > p_x + p_y           violated when lhs <= rhs
//   MULTI_SUPERADD  same over the index list serialized in `indices`
//   RATIO32       3 pi(x-1) <= 2 pi(2x-1)       violated when lhs >  rhs
//   SUBSET_DEFECT positive defect witness for the prime sequence
struct ViolationRecord {
    ViolationKind kind;
    uint64_t x = 0;
    uint64_t y = 0;
    uint64_t lhs = 0;
    uint64_t rhs = 0;
    std::string indices; // MULTI_SUPERADD only: "a;b;c"

    bool operator==(const ViolationRecord&) const = default;
};

struct ScanReport {
    ViolationKind kind;
    uint64_t bound = 0;
    uint64_t cursor = 0;       // last fully completed outer value
    bool completed = false;    // false when stopped by the stop flag
    uint64_t pairs_checked = 0;
    std::vector<ViolationRecord> violations;
};

struct ScanOptions {
    unsigned workers = 0;            // 0 = available hardware parallelism
    uint64_t chunk = 1024;           // outer values per checkpoint/merge unit
    uint64_t resume_cursor = 0;      // last completed outer value of a prior run
    uint64_t resume_violations = 0;  // violations already emitted up to resume_cursor
    const std::atomic<bool>* stop = nullptr;

    // Called with violations of each completed chunk, in ascending scan
    // order regardless of worker count.
    std::function<void(const ViolationRecord&)> sink;

    // Called after each completed chunk with a checkpoint describing it.
    std::function<void(const ScanCheckpoint&)> on_checkpoint;

    std::string config_fingerprint;  // copied into emitted checkpoints
};

// Exhaustive check of pi(x+y) <= pi(x) + pi(y) over 2 <= x <= y,
// x+y <= n_max, iterated by anti-diagonal s = x+y with 0/1-step updates of
// pi(x) and pi(s-x). Requires 4 <= n_max <= table limit.
ScanReport scan_hl(const PrimeTable& table, uint64_t n_max, const ScanOptions& opts = {});

// For every prime p <= p_max and 2 <= x <= p-2, asserts
// pi(x) + pi(p-x) != pi(p-1); equalities are reported. Requires p_max >= 5.
ScanReport scan_corollary1(const PrimeTable& table, uint64_t p_max, const ScanOptions& opts = {});

// Strict superadditivity of indexed primes: p_{a+b} > p_a + p_b over
// 2 <= a <= b, a+b <= n_max (equality counts as a violation). The table
// must hold at least n_max primes.
ScanReport scan_superadditivity(const PrimeTable& table, uint64_t n_max,
                                const ScanOptions& opts = {});

// 3 pi(x-1) <= 2 pi(2x-1) for 1 <= x <= x_max. Requires table limit
// >= 2*x_max - 1.
ScanReport scan_ratio_conjecture(const PrimeTable& table, uint64_t x_max,
                                 const ScanOptions& opts = {});

struct MultiSuperAddResult {
    std::vector<uint64_t> indices;
    uint64_t sum_index = 0;
    uint64_t lhs = 0;   // p_{sum of indices}
    uint64_t rhs = 0;   // sum of p_index
    bool holds = false; // lhs > rhs
};

std::string join_indices(std::span<const uint64_t> indices);

// p_{sum a_k} > sum p_{a_k} for an index list (each >= 2, length >= 2).
MultiSuperAddResult check_multi_superadd(const PrimeIndex& index,
                                         std::span<const uint64_t> indices);

// Smallest constant A making count_f(x) + count_f(y) >= count_f(x+y) - A
// hold over the scanned pairs, where count_f ranks a strictly increasing
// sequence f.
struct DefectResult {
    std::string sequence_name;
    uint64_t bound = 0;
    int64_t defect = 0;
    uint64_t witness_x = 0;
    uint64_t witness_y = 0;
};

// Maximum of count_f(x+y) - count_f(x) - count_f(y) over 2 <= x <= y,
// x+y <= n_max, with the first attaining witness in anti-diagonal order.
// The sequence must be strictly increasing (throws std::domain_error) and
// n_max >= 4.
DefectResult compute_defect(std::span<const uint64_t> sequence, uint64_t n_max,
                            std::string_view sequence_name);

// Closed form for the pair count of the anti-diagonal scans: number of
// pairs 2 <= x <= y with 4 <= x+y <= n.
uint64_t diagonal_pair_count(uint64_t n);

} // namespace primegauge
