#include "primegauge/equation.hpp"

#include <algorithm>
#include <stdexcept>

namespace primegauge {

std::string_view to_string(Convention c) {
    switch (c) {
        case Convention::Full: return "full";
        case Convention::Half: return "half";
        case Convention::HalfOpen: return "half-open";
    }
    return "unknown";
}

Convention parse_convention(std::string_view name) {
    if (name == "full") return Convention::Full;
    if (name == "half") return Convention::Half;
    if (name == "half-open") return Convention::HalfOpen;
    throw std::invalid_argument("unknown convention: " + std::string(name));
}

SolutionSet solve_pi_split(const PrimeTable& table, uint64_t p, Convention convention) {
    if (p > table.limit()) throw std::out_of_range("solve_pi_split: p exceeds table limit");
    if (p < 5 || !table.is_prime_unchecked(p)) {
        throw std::domain_error("solve_pi_split: p must be a prime >= 5");
    }

    uint64_t x_hi = 0;
    switch (convention) {
        case Convention::Full: x_hi = p - 2; break;
        case Convention::Half: x_hi = p / 2; break;
        case Convention::HalfOpen: x_hi = (p - 1) / 2; break; // largest x < p/2, p odd
    }

    SolutionSet set;
    set.p = p;
    set.convention = convention;

    const uint64_t target = table.pi_unchecked(p);
    uint64_t pix = 1;                            // pi(2)
    uint64_t piy = table.pi_unchecked(p - 2);
    for (uint64_t x = 2; x <= x_hi; ++x) {
        if (pix + piy == target) set.xs.push_back(x);
        pix += table.is_prime_unchecked(x + 1);
        piy -= table.is_prime_unchecked(p - x);
    }
    return set;
}

ClassifyResult classify_solution_sets(const PrimeTable& table, uint64_t p_max,
                                      Convention convention) {
    if (p_max < 5) throw std::invalid_argument("classify_solution_sets: p_max must be >= 5");
    if (p_max > table.limit()) {
        throw std::out_of_range("classify_solution_sets: p_max exceeds table limit");
    }

    ClassifyResult result;
    result.convention = convention;
    result.p_max = p_max;

    std::map<std::vector<uint64_t>, uint64_t> shape_id;
    PrimeStream stream(table);
    while (stream.has_next()) {
        uint64_t p = stream.next();
        if (p > p_max) break;
        if (p < 5) continue;
        SolutionSet set = solve_pi_split(table, p, convention);
        auto [it, inserted] = shape_id.try_emplace(set.xs, result.shapes.size());
        if (inserted) result.shapes.push_back(set.xs);
        result.shape_ids.push_back(it->second);
        result.by_shape[set.xs].push_back(p);
        result.sets.push_back(std::move(set));
    }
    return result;
}

ShapeComparison compare_with_known_shapes(const ClassifyResult& result) {
    ShapeComparison cmp;
    for (const auto& known : kKnownShapes) {
        ShapeComparison::KnownShape k;
        k.xs = known;
        auto it = result.by_shape.find(known);
        if (it != result.by_shape.end()) {
            k.found = true;
            k.first_p = it->second.front();
        }
        cmp.known.push_back(std::move(k));
    }
    // Observed shapes outside the known list, in first-occurrence order.
    for (size_t id = 0; id < result.shapes.size(); ++id) {
        const auto& xs = result.shapes[id];
        if (std::find(kKnownShapes.begin(), kKnownShapes.end(), xs) != kKnownShapes.end()) {
            continue;
        }
        ShapeComparison::ExtraShape extra;
        extra.xs = xs;
        const auto& primes = result.by_shape.at(xs);
        extra.first_p = primes.front();
        extra.count = primes.size();
        cmp.extras.push_back(std::move(extra));
    }
    uint64_t missing = 0;
    for (const auto& k : cmp.known) {
        if (!k.found) ++missing;
    }
    cmp.discrepancies = missing + cmp.extras.size();
    return cmp;
}

std::string join_xs(const std::vector<uint64_t>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ';';
        out += std::to_string(xs[i]);
    }
    return out;
}

} // namespace primegauge
