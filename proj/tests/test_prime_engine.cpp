#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "primegauge/errors.hpp"
#include "primegauge/legendre_pi.hpp"
#include "primegauge/prime_table.hpp"

#include "oracles.hpp"

using namespace primegauge;

TEST_CASE("build: small tables match trial division") {
  auto t10 = PrimeTable::build(10);
  CHECK(t10.prime_count() == 4);
  auto t1 = PrimeTable::build(1);
  CHECK(t1.prime_count() == 0);
  auto t2 = PrimeTable::build(2);
  CHECK(t2.prime_count() == 1);
  CHECK(t2.is_prime(2));

  CHECK_THROWS_AS(PrimeTable::build(0), std::invalid_argument);
}

TEST_CASE("is_prime agrees with trial division through 10^4") {
  auto t = PrimeTable::build(10000);
  for (uint64_t n = 0; n <= 10000; ++n) {
    CAPTURE(n);
    REQUIRE(t.is_prime(n) == oracle::is_prime(n));
  }
  CHECK(t.is_prime(2));
  CHECK_FALSE(t.is_prime(1));
  CHECK_FALSE(t.is_prime(0));
}

TEST_CASE("pi agrees with a naive prefix-count table through 10^4") {
  auto t = PrimeTable::build(10000);
  auto ref = oracle::pi_table(10000);
  for (uint64_t x = 0; x <= 10000; ++x) {
    CAPTURE(x);
    REQUIRE(t.pi(x) == ref[x]);
  }
  CHECK(t.pi(0) == 0);
  CHECK(t.pi(1) == 0);
  CHECK(t.pi(4) == 2);
}

TEST_CASE("pi at 10^6 and 10^7") {
  // 78498 and 664579 were frozen from an independent sieve run.
  auto t6 = PrimeTable::build(1000000);
  CHECK(t6.pi(1000000) == 78498);
  CHECK(t6.prime_count() == 78498);
  CHECK(t6.is_prime(999983));
  CHECK(oracle::is_prime(999983));

  auto t7 = PrimeTable::build(10000000);
  CHECK(t7.pi(10000000) == 664579);
  CHECK(t7.pi(1000000) == 78498);
}

TEST_CASE("telescoping: pi(x+1) - pi(x) matches primality") {
  auto t = PrimeTable::build(10000);
  for (uint64_t x = 0; x < 10000; ++x) {
    CAPTURE(x);
    REQUIRE(t.pi(x + 1) - t.pi(x) == (t.is_prime(x + 1) ? 1u : 0u));
  }
}

TEST_CASE("monotonicity of pi on random pairs") {
  auto t = PrimeTable::build(1u << 20);
  std::mt19937_64 rng(20260814);
  std::uniform_int_distribution<uint64_t> dist(0, t.limit());
  for (int i = 0; i < 2000; ++i) {
    uint64_t a = dist(rng), b = dist(rng);
    if (a > b) std::swap(a, b);
    CAPTURE(a);
    CAPTURE(b);
    REQUIRE(t.pi(a) <= t.pi(b));
  }
}

TEST_CASE("nth_prime basics and round trips") {
  auto t = PrimeTable::build(2000000);
  CHECK(t.nth_prime(1) == 2);
  CHECK(t.nth_prime(2) == 3);
  CHECK(t.nth_prime(3) == 5);
  CHECK(t.nth_prime(4) == 7);
  // Frozen from sieve + enumeration.
  CHECK(t.nth_prime(100000) == 1299709);
  CHECK(t.nth_prime(20000) == 224737);

  // pi(p_n) = n across the small materialized range and beyond it.
  for (uint64_t n = 1; n <= 1000; ++n) {
    REQUIRE(t.pi(t.nth_prime(n)) == n);
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<uint64_t> dist(1, t.prime_count());
  for (int i = 0; i < 500; ++i) {
    uint64_t n = dist(rng);
    CAPTURE(n);
    uint64_t p = t.nth_prime(n);
    REQUIRE(t.is_prime(p));
    REQUIRE(t.pi(p) == n);
  }
  // nth_prime(pi(p)) = p for prime p.
  PrimeStream stream(t);
  for (int i = 0; i < 200 && stream.has_next(); ++i) {
    uint64_t p = stream.next();
    REQUIRE(t.nth_prime(t.pi(p)) == p);
  }
  // Strictly increasing across the small-array / bit-select boundary.
  for (uint64_t n = 1; n < 90000; n += 97) {
    REQUIRE(t.nth_prime(n + 1) > t.nth_prime(n));
  }
}

TEST_CASE("range errors") {
  auto t = PrimeTable::build(100);
  CHECK_THROWS_AS((void)t.pi(101), std::out_of_range);
  CHECK_THROWS_AS((void)t.is_prime(101), std::out_of_range);
  CHECK_THROWS_AS((void)t.nth_prime(0), std::out_of_range);
  CHECK_THROWS_AS((void)t.nth_prime(t.prime_count() + 1), std::out_of_range);
  CHECK_NOTHROW((void)t.nth_prime(t.prime_count()));
}

TEST_CASE("PrimeStream and first_n_primes enumerate in order") {
  auto t = PrimeTable::build(1000);
  auto ref = oracle::primes_upto(1000);
  PrimeStream stream(t);
  std::vector<uint64_t> got;
  while (stream.has_next()) got.push_back(stream.next());
  CHECK(got == ref);

  auto f25 = first_n_primes(t, 25);
  CHECK(f25 == std::vector<uint64_t>(ref.begin(), ref.begin() + 25));
  CHECK(first_n_primes(t, 0).empty());
  CHECK_THROWS_AS(first_n_primes(t, t.prime_count() + 1), std::out_of_range);
}

TEST_CASE("nth_prime_upper_bound really bounds p_n") {
  auto t = PrimeTable::build(2000000);
  PrimeIndex ix(t);
  for (uint64_t n = 1; n <= ix.max_index(); n += 1237) {
    CAPTURE(n);
    REQUIRE(ix.nth(n) <= nth_prime_upper_bound(n));
  }
  CHECK(ix.nth(ix.max_index()) <= nth_prime_upper_bound(ix.max_index()));
}

TEST_CASE("pi_unbounded matches the table") {
  CHECK(pi_unbounded(0) == 0);
  CHECK(pi_unbounded(1) == 0);
  CHECK(pi_unbounded(2) == 1);
  auto ref = oracle::pi_table(500);
  for (uint64_t x = 0; x <= 500; ++x) {
    CAPTURE(x);
    REQUIRE(pi_unbounded(x) == ref[x]);
  }
  CHECK(pi_unbounded(1000000) == 78498);
  // Frozen from a segmented-sieve cross-check.
  CHECK(pi_unbounded(100000000) == 5761455);

  auto t = PrimeTable::build(1000000);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<uint64_t> dist(0, t.limit());
  for (int i = 0; i < 1000; ++i) {
    uint64_t x = dist(rng);
    CAPTURE(x);
    REQUIRE(pi_unbounded(x) == t.pi(x));
  }
}

TEST_CASE("pi_unbounded ceiling") {
  CHECK_THROWS_AS((void)pi_unbounded(1000, 100), ResourceError);
  CHECK_NOTHROW((void)pi_unbounded(100, 100));
}

TEST_CASE("memory ceiling errors name the ceiling") {
  uint64_t ceiling = PrimeTable::limit_ceiling();
  try {
    (void)PrimeTable::build(ceiling + 1);
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    std::string msg = e.what();
    CHECK(msg.find(std::to_string(ceiling)) != std::string::npos);
  }

  // PRIMEGAUGE_MEM_CEILING (bytes) lowers the derived limit ceiling.
  setenv("PRIMEGAUGE_MEM_CEILING", "100000", 1);
  uint64_t lowered = PrimeTable::limit_ceiling();
  CHECK(lowered < ceiling);
  CHECK(PrimeTable::estimated_bytes(lowered) <= 100000);
  CHECK_THROWS_AS(PrimeTable::build(lowered + 1000000), ResourceError);
  CHECK_NOTHROW(PrimeTable::build(std::min<uint64_t>(lowered, 100000)));
  unsetenv("PRIMEGAUGE_MEM_CEILING");
  CHECK(PrimeTable::limit_ceiling() == ceiling);
}

TEST_CASE("estimated_bytes grows with limit") {
  CHECK(PrimeTable::estimated_bytes(1000) < PrimeTable::estimated_bytes(1000000));
  CHECK(PrimeTable::estimated_bytes(1000000) < PrimeTable::estimated_bytes(100000000));
}
