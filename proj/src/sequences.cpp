#include "primegauge/sequences.hpp"

#include <stdexcept>
#include <string>

namespace primegauge {

std::vector<uint64_t> primes_sequence(const PrimeTable& table, uint64_t n_max) {
  std::vector<uint64_t> out;
  PrimeStream stream(table);
  while (stream.has_next()) {
    uint64_t p = stream.next();
    if (p > n_max) break;
    out.push_back(p);
  }
  return out;
}

std::vector<uint64_t> twin_lower_sequence(const PrimeTable& table, uint64_t n_max) {
  // p such that p and p+2 are both prime; needs table coverage to n_max + 2.
  if (table.limit() < n_max + 2) {
    throw std::invalid_argument("twin_lower_sequence: table limit too small");
  }
  std::vector<uint64_t> out;
  PrimeStream stream(table);
  while (stream.has_next()) {
    uint64_t p = stream.next();
    if (p > n_max) break;
    if (table.is_prime_unchecked(p + 2)) out.push_back(p);
  }
  return out;
}

std::vector<uint64_t> even_sequence(uint64_t n_max) {
  std::vector<uint64_t> out;
  for (uint64_t v = 2; v <= n_max; v += 2) out.push_back(v);
  return out;
}

std::vector<uint64_t> named_sequence(std::string_view name, const PrimeTable& table,
                                     uint64_t n_max) {
  if (name == "primes") return primes_sequence(table, n_max);
  if (name == "twins") return twin_lower_sequence(table, n_max);
  if (name == "evens") return even_sequence(n_max);
  throw std::invalid_argument("unknown sequence: " + std::string(name));
}

} // namespace primegauge
