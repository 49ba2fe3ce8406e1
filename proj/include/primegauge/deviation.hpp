#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "primegauge/prime_table.hpp"

namespace primegauge {

// Sign convention for the residual of d = (sum of first L primes) minus
// p_{L(L+1)/2} against the 4L^2 trend: d is negative from L = 3 on, so
// under Neg the trend is taken as -4L^2 (residual = d + 4L^2); under Pos
// the trend is +4L^2 (residual = d - 4L^2).
enum class SignConvention { Neg, Pos };

std::string_view to_string(SignConvention s);
SignConvention parse_sign(std::string_view name);

struct DeviationRow {
    uint64_t L = 0;
    uint64_t index_sum = 0;       // L(L+1)/2
    uint64_t prime_sum = 0;       // p_1 + ... + p_L
    uint64_t p_at_index_sum = 0;  // p_{L(L+1)/2}
    int64_t d = 0;                // prime_sum - p_at_index_sum
    int64_t trend = 0;            // 4L^2

    int64_t residual(SignConvention s) const {
        return s == SignConvention::Neg ? d + trend : d - trend;
    }
};

// One row per L in [1, L_max], computed from a single forward pass over
// the table's primes (the largest index touched is L_max(L_max+1)/2).
// Throws std::out_of_range when the table holds too few primes.
std::vector<DeviationRow> deviation_series(const PrimeTable& table, uint64_t L_max);

struct FitResult {
    std::string model;
    double exponent = 0;
    double coefficient = 0;
    double r_squared = 0;
    uint64_t n_points = 0;
};

// Least-squares power-law fits in log-log space, zero-valued rows dropped:
// abs_deviation fits |d| against c*L^e; abs_residual fits the residual
// magnitude under the given sign convention the same way (omitted when
// fewer than 8 rows have a nonzero residual, e.g. a planted d = 4L^2 under
// Pos). Throws InsufficientDataError when fewer than 8 rows are usable for
// the primary fit.
struct TrendFits {
    FitResult abs_deviation;
    std::optional<FitResult> abs_residual;
};

TrendFits fit_trend(std::span<const DeviationRow> rows, SignConvention sign);

struct LagCorrelation {
    uint64_t lag = 0;
    double r = 0;
};

// Mean-removed normalized autocorrelation over lags 1..floor(n/4); returns
// the local maxima above the 2/sqrt(n) significance threshold, strongest
// first (at most top_k). Throws InsufficientDataError for fewer than 32
// points.
std::vector<LagCorrelation> periodicity_scan(std::span<const double> residuals,
                                             size_t top_k = 5);

} // namespace primegauge
