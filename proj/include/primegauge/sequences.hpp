#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "primegauge/prime_table.hpp"

namespace primegauge {

// Strictly increasing integer sequences the defect calculator can rank.
// The table must cover the requested range (n_max + 2 for twin lowers).
std::vector<uint64_t> primes_sequence(const PrimeTable& table, uint64_t n_max);
std::vector<uint64_t> twin_lower_sequence(const PrimeTable& table, uint64_t n_max);
std::vector<uint64_t> even_sequence(uint64_t n_max);

// Resolves one of the named sequences above ("primes", "twins", "evens").
// Throws std::invalid_argument for unknown names.
std::vector<uint64_t> named_sequence(std::string_view name, const PrimeTable& table,
                                     uint64_t n_max);

} // namespace primegauge
