#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "primegauge/prime_table.hpp"

namespace primegauge {

// x-range convention for the split equation pi(p) = pi(x) + pi(p-x).
// Full enumerates 2 <= x <= p-2 (solutions come in symmetric pairs),
// Half stops at floor(p/2), HalfOpen at x < p/2. For odd p the last two
// coincide; both are kept so every plausible reading is reproducible.
enum class Convention { Full, Half, HalfOpen };

std::string_view to_string(Convention c);
Convention parse_convention(std::string_view name);

struct SolutionSet {
    uint64_t p = 0;
    Convention convention = Convention::Half;
    std::vector<uint64_t> xs; // sorted ascending
};

// Exact enumeration of pi(p) = pi(x) + pi(p-x) over the convention's
// x-range with 0/1-step pi updates. p must be a prime >= 5 within the
// table (std::domain_error / std::out_of_range otherwise).
SolutionSet solve_pi_split(const PrimeTable& table, uint64_t p, Convention convention);

// All primes 5 <= p <= p_max grouped by the shape of their solution set.
// Shape ids are assigned in order of first occurrence over ascending p.
struct ClassifyResult {
    Convention convention = Convention::Half;
    uint64_t p_max = 0;
    std::vector<SolutionSet> sets;                            // ascending p
    std::vector<uint64_t> shape_ids;                          // aligned with sets
    std::vector<std::vector<uint64_t>> shapes;                // id -> canonical xs
    std::map<std::vector<uint64_t>, std::vector<uint64_t>> by_shape; // shape -> primes
};

ClassifyResult classify_solution_sets(const PrimeTable& table, uint64_t p_max,
                                      Convention convention);

// The three solution-set shapes the classifier's report checks for.
inline const std::vector<std::vector<uint64_t>> kKnownShapes = {
    {2}, {2, 3, 4}, {2, 3, 4, 9, 10}};

// Comparison of the observed shapes against kKnownShapes: which known
// shapes occur (with the first prime exhibiting them), and which observed
// shapes fall outside the known list. Both kinds of mismatch are
// discrepancies to report, not errors.
struct ShapeComparison {
    struct KnownShape {
        std::vector<uint64_t> xs;
        bool found = false;
        uint64_t first_p = 0;
    };
    struct ExtraShape {
        std::vector<uint64_t> xs;
        uint64_t first_p = 0;
        uint64_t count = 0;
    };
    std::vector<KnownShape> known;
    std::vector<ExtraShape> extras;
    uint64_t discrepancies = 0; // missing known shapes + extra shapes
};

ShapeComparison compare_with_known_shapes(const ClassifyResult& result);

std::string join_xs(const std::vector<uint64_t>& xs);

} // namespace primegauge
