#include "primegauge/deviation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "primegauge/errors.hpp"

namespace primegauge {

std::string_view to_string(SignConvention s) {
    return s == SignConvention::Neg ? "neg" : "pos";
}

SignConvention parse_sign(std::string_view name) {
    if (name == "neg") return SignConvention::Neg;
    if (name == "pos") return SignConvention::Pos;
    throw std::invalid_argument("unknown sign convention: " + std::string(name));
}

std::vector<DeviationRow> deviation_series(const PrimeTable& table, uint64_t L_max) {
    if (L_max < 1) throw std::invalid_argument("deviation_series: L_max must be >= 1");
    const uint64_t last_index = L_max * (L_max + 1) / 2;
    if (last_index > table.prime_count()) {
        throw std::out_of_range("deviation_series: table holds " +
                                std::to_string(table.prime_count()) +
                                " primes, need index " + std::to_string(last_index));
    }

    std::vector<uint64_t> prefix_sums(L_max + 1, 0); // prefix_sums[L] = p_1 + ... + p_L
    std::vector<uint64_t> p_at(L_max + 1, 0);        // p at the triangular index of L

    PrimeStream stream(table);
    uint64_t running_sum = 0;
    uint64_t next_L = 1;
    uint64_t next_tri = 1;
    for (uint64_t i = 1; i <= last_index; ++i) {
        uint64_t p = stream.next();
        if (i <= L_max) {
            running_sum += p;
            prefix_sums[i] = running_sum;
        }
        if (i == next_tri) {
            p_at[next_L] = p;
            ++next_L;
            next_tri += next_L;
        }
    }

    std::vector<DeviationRow> rows;
    rows.reserve(L_max);
    for (uint64_t L = 1; L <= L_max; ++L) {
        DeviationRow row;
        row.L = L;
        row.index_sum = L * (L + 1) / 2;
        row.prime_sum = prefix_sums[L];
        row.p_at_index_sum = p_at[L];
        row.d = static_cast<int64_t>(row.prime_sum) - static_cast<int64_t>(row.p_at_index_sum);
        row.trend = static_cast<int64_t>(4 * L * L);
        rows.push_back(row);
    }
    return rows;
}

namespace {

FitResult power_law_fit(const std::vector<std::pair<double, double>>& points,
                        std::string model) {
    // Ordinary least squares on (ln L, ln value).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(points.size());
    std::vector<double> lx(points.size()), ly(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        lx[i] = std::log(points[i].first);
        ly[i] = std::log(points[i].second);
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double denom = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;

    double ss_res = 0, ss_tot = 0;
    const double mean_y = sy / n;
    for (size_t i = 0; i < points.size(); ++i) {
        const double fit = intercept + slope * lx[i];
        ss_res += (ly[i] - fit) * (ly[i] - fit);
        ss_tot += (ly[i] - mean_y) * (ly[i] - mean_y);
    }
    FitResult res;
    res.model = std::move(model);
    res.exponent = slope;
    res.coefficient = std::exp(intercept);
    res.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : (ss_res == 0 ? 1.0 : 0.0);
    res.n_points = points.size();
    return res;
}

} // namespace

TrendFits fit_trend(std::span<const DeviationRow> rows, SignConvention sign) {
    std::vector<std::pair<double, double>> abs_d;
    std::vector<std::pair<double, double>> abs_res;
    for (const auto& row : rows) {
        if (row.d != 0) {
            abs_d.emplace_back(double(row.L), std::abs(double(row.d)));
        }
        const int64_t r = row.residual(sign);
        if (r != 0) {
            abs_res.emplace_back(double(row.L), std::abs(double(r)));
        }
    }
    if (abs_d.size() < 8) {
        throw InsufficientDataError("fit_trend: " + std::to_string(abs_d.size()) +
                                    " usable rows, need at least 8");
    }
    TrendFits fits;
    fits.abs_deviation = power_law_fit(abs_d, "abs(d) ~ c*L^e");
    if (abs_res.size() >= 8) {
        std::string model = sign == SignConvention::Neg ? "abs(d + 4L^2) ~ c*L^e"
                                                        : "abs(d - 4L^2) ~ c*L^e";
        fits.abs_residual = power_law_fit(abs_res, std::move(model));
    }
    return fits;
}

std::vector<LagCorrelation> periodicity_scan(std::span<const double> residuals, size_t top_k) {
    const size_t n = residuals.size();
    if (n < 32) {
        throw InsufficientDataError("periodicity_scan: " + std::to_string(n) +
                                    " points, need at least 32");
    }
    double mean = 0;
    for (double v : residuals) mean += v;
    mean /= static_cast<double>(n);

    double denom = 0;
    for (double v : residuals) denom += (v - mean) * (v - mean);
    if (!(denom > 0)) return {}; // constant series has no structure to rank

    const size_t max_lag = n / 4;
    std::vector<double> ac(max_lag + 1, 0.0);
    for (size_t k = 1; k <= max_lag; ++k) {
        double num = 0;
        for (size_t i = 0; i + k < n; ++i) {
            num += (residuals[i] - mean) * (residuals[i + k] - mean);
        }
        ac[k] = num / denom;
    }

    const double threshold = 2.0 / std::sqrt(static_cast<double>(n));
    std::vector<LagCorrelation> peaks;
    for (size_t k = 1; k <= max_lag; ++k) {
        if (ac[k] <= threshold) continue;
        const double left = k > 1 ? ac[k - 1] : -2.0;
        const double right = k < max_lag ? ac[k + 1] : -2.0;
        if (ac[k] > left && ac[k] > right) {
            peaks.push_back({k, ac[k]});
        }
    }
    std::sort(peaks.begin(), peaks.end(), [](const LagCorrelation& a, const LagCorrelation& b) {
        if (a.r != b.r) return a.r > b.r;
        return a.lag < b.lag;
    });
    if (peaks.size() > top_k) peaks.resize(top_k);
    return peaks;
}

} // namespace primegauge
