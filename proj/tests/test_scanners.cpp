#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>

#include "primegauge/errors.hpp"
#include "primegauge/scan.hpp"
#include "primegauge/sequences.hpp"

#include "oracles.hpp"

using namespace primegauge;

static const PrimeTable& shared_table() {
  static PrimeTable t = PrimeTable::build(20000);
  return t;
}

TEST_CASE("diagonal_pair_count matches a double loop") {
  for (uint64_t n = 4; n <= 80; ++n) {
    uint64_t brute = 0;
    for (uint64_t x = 2; 2 * x <= n; ++x) {
      for (uint64_t y = x; x + y <= n; ++y) ++brute;
    }
    CAPTURE(n);
    REQUIRE(diagonal_pair_count(n) == brute);
  }
  CHECK(diagonal_pair_count(4) == 1);
  CHECK(diagonal_pair_count(5) == 2);
}

TEST_CASE("scan_hl: base cases and oracle equivalence") {
  const auto& t = shared_table();

  auto r4 = scan_hl(t, 4);
  CHECK(r4.violations.empty());
  CHECK(r4.pairs_checked == 1);
  CHECK(r4.completed);
  CHECK(r4.cursor == 4);

  auto r5 = scan_hl(t, 5);
  CHECK(r5.violations.empty());
  CHECK(r5.pairs_checked == 2);

  auto r2000 = scan_hl(t, 2000);
  CHECK(r2000.pairs_checked == diagonal_pair_count(2000));
  auto ref = oracle::hl_violations(2000);
  CHECK(r2000.violations.size() == ref.size());
  CHECK(ref.empty());

  CHECK_THROWS_AS(scan_hl(t, 3), std::invalid_argument);
  CHECK_THROWS_AS(scan_hl(t, t.limit() + 1), std::out_of_range);
}

TEST_CASE("scan_hl: bound monotonicity of the violation set") {
  const auto& t = shared_table();
  std::vector<ViolationRecord> prev;
  for (uint64_t n : {100, 500, 2000, 5000}) {
    auto r = scan_hl(t, n);
    // every violation of the smaller bound appears under the larger one
    for (const auto& v : prev) {
      REQUIRE(std::find(r.violations.begin(), r.violations.end(), v) != r.violations.end());
    }
    REQUIRE(r.pairs_checked == diagonal_pair_count(n));
    prev = r.violations;
  }
}

TEST_CASE("scan_corollary1: clean small ranges, oracle equivalence") {
  const auto& t = shared_table();

  auto r7 = scan_corollary1(t, 7);
  CHECK(r7.violations.empty());
  CHECK(r7.completed);

  auto r5 = scan_corollary1(t, 5);
  CHECK(r5.violations.empty());

  auto r2000 = scan_corollary1(t, 2000);
  auto ref = oracle::corollary1_hits(2000);
  CHECK(r2000.violations.empty() == ref.empty());
  CHECK(ref.empty());

  CHECK_THROWS_AS(scan_corollary1(t, 4), std::invalid_argument);
}

TEST_CASE("corollary1 equality is exactly an HL violation at (x, p-x)") {
  // pi(p-1) = pi(p) - 1 for prime p, so pi(x)+pi(p-x) = pi(p-1) would force
  // pi(x)+pi(p-x) < pi(p) = pi(x + (p-x)). Checked directly over p <= 2000.
  const auto& t = shared_table();
  for (uint64_t p = 5; p <= 2000; ++p) {
    if (!t.is_prime(p)) continue;
    REQUIRE(t.pi(p - 1) == t.pi(p) - 1);
    for (uint64_t x = 2; x + 2 <= p; ++x) {
      bool c1_equal = t.pi(x) + t.pi(p - x) == t.pi(p - 1);
      bool hl_violated = t.pi(p) > t.pi(x) + t.pi(p - x);
      REQUIRE(c1_equal == hl_violated);
    }
  }
}

TEST_CASE("scan_superadditivity: base case and oracle equivalence") {
  const auto& t = shared_table();

  auto r4 = scan_superadditivity(t, 4);
  CHECK(r4.violations.empty());
  CHECK(r4.pairs_checked == 1); // (2,2): p_4 = 7 > p_2 + p_2 = 6

  auto r500 = scan_superadditivity(t, 500);
  auto ref = oracle::superadd_failures(500);
  CHECK(r500.violations.size() == ref.size());
  CHECK(ref.empty());
  CHECK(r500.pairs_checked == diagonal_pair_count(500));

  CHECK_THROWS_AS(scan_superadditivity(t, 3), std::invalid_argument);
  CHECK_THROWS_AS(scan_superadditivity(t, t.prime_count() + 1), std::out_of_range);
}

TEST_CASE("scan_ratio_conjecture: small cases and oracle equivalence") {
  const auto& t = shared_table();

  auto r1 = scan_ratio_conjecture(t, 1);
  CHECK(r1.violations.empty()); // 3*pi(0) = 0 <= 2*pi(1) = 0
  CHECK(r1.pairs_checked == 1);

  auto r3 = scan_ratio_conjecture(t, 3);
  CHECK(r3.violations.empty()); // x=3: 3*pi(2) = 3 <= 2*pi(5) = 6

  auto r2000 = scan_ratio_conjecture(t, 2000);
  auto ref = oracle::ratio_failures(2000);
  CHECK(r2000.violations.size() == ref.size());
  CHECK(ref.empty());
  CHECK(r2000.pairs_checked == 2000);

  CHECK_THROWS_AS(scan_ratio_conjecture(t, 0), std::invalid_argument);
  CHECK_THROWS_AS(scan_ratio_conjecture(t, t.limit()), std::out_of_range);
}

TEST_CASE("worker count does not change any report") {
  const auto& t = shared_table();
  for (unsigned workers : {1u, 2u, 4u, 7u}) {
    ScanOptions o;
    o.workers = workers;
    o.chunk = 97; // deliberately not a divisor of anything relevant
    auto hl = scan_hl(t, 3000, o);
    auto hl1 = scan_hl(t, 3000);
    CHECK(hl.violations == hl1.violations);
    CHECK(hl.pairs_checked == hl1.pairs_checked);
    CHECK(hl.cursor == hl1.cursor);

    auto sup = scan_superadditivity(t, 400, o);
    auto sup1 = scan_superadditivity(t, 400);
    CHECK(sup.violations == sup1.violations);
    CHECK(sup.pairs_checked == sup1.pairs_checked);
  }
}

TEST_CASE("stop flag + resume reproduces an uninterrupted scan") {
  const auto& t = shared_table();
  auto full = scan_hl(t, 4000);

  std::atomic<bool> stop{false};
  ScanOptions first;
  first.chunk = 128;
  first.stop = &stop;
  ScanCheckpoint last{};
  first.on_checkpoint = [&](const ScanCheckpoint& ck) {
    last = ck;
    if (ck.cursor >= 1500) stop.store(true);
  };
  first.config_fingerprint = "test-fp";
  auto part1 = scan_hl(t, 4000, first);
  REQUIRE_FALSE(part1.completed);
  REQUIRE(part1.cursor >= 1500);
  REQUIRE(part1.cursor < 4000);
  CHECK(last.cursor == part1.cursor);
  CHECK(last.config_fingerprint == "test-fp");
  CHECK(last.violations_so_far == part1.violations.size());
  CHECK(last.bound == 4000);

  ScanOptions second;
  second.resume_cursor = part1.cursor;
  second.resume_violations = part1.violations.size();
  auto part2 = scan_hl(t, 4000, second);
  REQUIRE(part2.completed);
  CHECK(part2.cursor == 4000);

  auto merged = part1.violations;
  merged.insert(merged.end(), part2.violations.begin(), part2.violations.end());
  CHECK(merged == full.violations);
  // pairs_checked is cumulative: a resumed report covers the whole scan
  CHECK(part1.pairs_checked == diagonal_pair_count(part1.cursor));
  CHECK(part2.pairs_checked == full.pairs_checked);
  CHECK(full.pairs_checked == diagonal_pair_count(4000));
}

TEST_CASE("resume keeps pairs_checked cumulative for every scan kind") {
  const auto& t = shared_table();
  struct Case {
    uint64_t stop_at;
    std::function<ScanReport(const ScanOptions&)> run;
  };
  std::vector<Case> cases = {
      {1000, [&](const ScanOptions& o) { return scan_hl(t, 3000, o); }},
      {1000, [&](const ScanOptions& o) { return scan_corollary1(t, 3000, o); }},
      {300, [&](const ScanOptions& o) { return scan_superadditivity(t, 800, o); }},
      {1000, [&](const ScanOptions& o) { return scan_ratio_conjecture(t, 3000, o); }},
  };
  for (auto& c : cases) {
    auto full = c.run({});
    std::atomic<bool> stop{false};
    ScanOptions first;
    first.chunk = 100;
    first.stop = &stop;
    first.on_checkpoint = [&](const ScanCheckpoint& ck) {
      if (ck.cursor >= c.stop_at) stop.store(true);
    };
    auto part1 = c.run(first);
    REQUIRE_FALSE(part1.completed);
    ScanOptions second;
    second.resume_cursor = part1.cursor;
    second.resume_violations = part1.violations.size();
    auto part2 = c.run(second);
    REQUIRE(part2.completed);
    CHECK(part2.pairs_checked == full.pairs_checked);
    auto merged = part1.violations;
    merged.insert(merged.end(), part2.violations.begin(), part2.violations.end());
    CHECK(merged == full.violations);
  }
}

TEST_CASE("checkpoint stream: cursors ascend, counts accumulate") {
  const auto& t = shared_table();
  ScanOptions o;
  o.chunk = 256;
  std::vector<ScanCheckpoint> cks;
  o.on_checkpoint = [&](const ScanCheckpoint& ck) { cks.push_back(ck); };
  auto r = scan_hl(t, 3000, o);
  REQUIRE_FALSE(cks.empty());
  for (size_t i = 1; i < cks.size(); ++i) {
    REQUIRE(cks[i].cursor > cks[i - 1].cursor);
    REQUIRE(cks[i].violations_so_far >= cks[i - 1].violations_so_far);
  }
  CHECK(cks.back().cursor == 3000);
  CHECK(cks.back().violations_so_far == r.violations.size());
  for (const auto& ck : cks) {
    CHECK(ck.bound == 3000);
    CHECK(ck.engine_limit == t.limit());
    CHECK(ck.scan_kind == "HL");
  }
}

TEST_CASE("sink sees violations in scan order") {
  // The clean conjecture scans emit nothing, so drive the sink through the
  // one scan guaranteed to produce records: none exist. Instead assert the
  // sink contract on scan_hl directly: collected == report.violations.
  const auto& t = shared_table();
  ScanOptions o;
  o.workers = 4;
  std::vector<ViolationRecord> seen;
  o.sink = [&](const ViolationRecord& v) { seen.push_back(v); };
  auto r = scan_hl(t, 2000, o);
  CHECK(seen == r.violations);
}

TEST_CASE("check_multi_superadd") {
  const auto& t = shared_table();
  PrimeIndex ix(t);

  auto a = check_multi_superadd(ix, std::vector<uint64_t>{2, 2, 2});
  CHECK(a.lhs == 13); // p_6
  CHECK(a.rhs == 9);
  CHECK(a.holds);
  CHECK(a.sum_index == 6);

  auto b = check_multi_superadd(ix, std::vector<uint64_t>{2, 2});
  CHECK(b.lhs == 7);
  CHECK(b.rhs == 6);
  CHECK(b.holds);

  auto c = check_multi_superadd(ix, std::vector<uint64_t>{3, 4, 5});
  CHECK(c.lhs == 37); // p_12
  CHECK(c.rhs == 23); // 5 + 7 + 11
  CHECK(c.holds);

  CHECK_THROWS_AS(check_multi_superadd(ix, std::vector<uint64_t>{1, 5}), std::domain_error);
  CHECK_THROWS_AS(check_multi_superadd(ix, std::vector<uint64_t>{4}), std::domain_error);
  CHECK_THROWS_AS(check_multi_superadd(ix, std::vector<uint64_t>{ix.max_index(), 2}),
                  std::out_of_range);

  CHECK(join_indices(c.indices) == "3;4;5");

  // Random index lists hold (empirical superadditivity, lists of 2..6).
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<uint64_t> len(2, 6), val(2, 300);
  for (int i = 0; i < 300; ++i) {
    std::vector<uint64_t> ids(len(rng));
    for (auto& v : ids) v = val(rng);
    auto res = check_multi_superadd(ix, ids);
    CAPTURE(join_indices(ids));
    REQUIRE(res.holds);
  }
}

TEST_CASE("compute_defect: evens, primes, twins") {
  const auto& t = shared_table();

  auto evens = even_sequence(200);
  auto de = compute_defect(evens, 100, "evens");
  auto ref_e = oracle::sequence_defect(evens, 100);
  CHECK(de.defect == ref_e.value);
  CHECK(de.defect == 1);
  CHECK(de.witness_x == ref_e.x);
  CHECK(de.witness_y == ref_e.y);
  CHECK(de.witness_x == 3); // first odd pair in diagonal order
  CHECK(de.witness_y == 3);
  CHECK(de.sequence_name == "evens");
  CHECK(de.bound == 100);

  auto primes = primes_sequence(t, 1000);
  auto dp = compute_defect(primes, 1000, "primes");
  auto ref_p = oracle::sequence_defect(primes, 1000);
  CHECK(dp.defect == ref_p.value);
  CHECK(dp.defect <= 0);
  CHECK(dp.witness_x == ref_p.x);
  CHECK(dp.witness_y == ref_p.y);

  auto twins = twin_lower_sequence(t, 1000);
  REQUIRE(!twins.empty());
  CHECK(twins.front() == 3); // 3,5
  auto dt = compute_defect(twins, 1000, "twins");
  auto ref_t = oracle::sequence_defect(twins, 1000);
  CHECK(dt.defect == ref_t.value);
  auto dt2 = compute_defect(twins, 1000, "twins");
  CHECK(dt.defect == dt2.defect); // recomputation stable
  CHECK(dt.witness_x == dt2.witness_x);
  CHECK(dt.witness_y == dt2.witness_y);

  CHECK_THROWS_AS(compute_defect(std::vector<uint64_t>{2, 2, 3}, 10, "bad"), std::domain_error);
  CHECK_THROWS_AS(compute_defect(std::vector<uint64_t>{5, 3}, 10, "bad"), std::domain_error);
  CHECK_THROWS_AS(compute_defect(evens, 3, "evens"), std::invalid_argument);
}

TEST_CASE("checkpoint file round trip and validation") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "pg_ck_test";
  fs::create_directories(dir);
  fs::path path = dir / "scan.ck";

  ScanCheckpoint ck;
  ck.scan_kind = "HL";
  ck.bound = 100000;
  ck.cursor = 41216;
  ck.violations_so_far = 0;
  ck.config_fingerprint = scan_fingerprint("HL", 100000, "jsonl");
  ck.engine_limit = 100000;

  save_checkpoint(ck, path);
  auto loaded = load_checkpoint(path);
  REQUIRE(loaded.has_value());
  CHECK(loaded->scan_kind == ck.scan_kind);
  CHECK(loaded->bound == ck.bound);
  CHECK(loaded->cursor == ck.cursor);
  CHECK(loaded->violations_so_far == ck.violations_so_far);
  CHECK(loaded->config_fingerprint == ck.config_fingerprint);
  CHECK(loaded->engine_limit == ck.engine_limit);

  // the temp file used for atomic replacement must be gone
  size_t entries = 0;
  for (auto& _ : fs::directory_iterator(dir)) {
    (void)_;
    ++entries;
  }
  CHECK(entries == 1);

  CHECK_NOTHROW(validate_checkpoint(*loaded, ck.config_fingerprint, 100000, 100000));
  CHECK_THROWS_AS(validate_checkpoint(*loaded, "0000000000000000", 100000, 100000),
                  CheckpointError);
  CHECK_THROWS_AS(validate_checkpoint(*loaded, ck.config_fingerprint, 50000, 100000),
                  CheckpointError);
  CHECK_THROWS_AS(validate_checkpoint(*loaded, ck.config_fingerprint, 100000, 90000),
                  CheckpointError);
  auto bad = *loaded;
  bad.cursor = bad.bound + 1;
  CHECK_THROWS_AS(validate_checkpoint(bad, ck.config_fingerprint, 100000, 100000),
                  CheckpointError);

  CHECK_FALSE(load_checkpoint(dir / "absent.ck").has_value());

  std::ofstream(dir / "garbage.ck") << "{not json";
  CHECK_THROWS_AS(load_checkpoint(dir / "garbage.ck"), CheckpointError);

  fs::remove_all(dir);
}

TEST_CASE("fingerprints separate configurations") {
  auto a = scan_fingerprint("HL", 100000, "jsonl");
  CHECK(a.size() == 16);
  CHECK(a == scan_fingerprint("HL", 100000, "jsonl")); // deterministic
  CHECK(a != scan_fingerprint("HL", 100001, "jsonl"));
  CHECK(a != scan_fingerprint("COROLLARY1", 100000, "jsonl"));
  CHECK(a != scan_fingerprint("HL", 100000, "csv"));
  CHECK(fnv1a_hex("") == fnv1a_hex(""));
  CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
}

TEST_CASE("sequence generators") {
  const auto& t = shared_table();
  CHECK(primes_sequence(t, 10) == std::vector<uint64_t>{2, 3, 5, 7});
  CHECK(even_sequence(9) == std::vector<uint64_t>{2, 4, 6, 8});
  CHECK(twin_lower_sequence(t, 20) == std::vector<uint64_t>{3, 5, 11, 17});
  // every twin lower member p has p+2 prime
  for (uint64_t p : twin_lower_sequence(t, 5000)) {
    REQUIRE(t.is_prime(p));
    REQUIRE(t.is_prime(p + 2));
  }
  CHECK(named_sequence("evens", t, 9) == even_sequence(9));
  CHECK_THROWS_AS(named_sequence("nope", t, 10), std::invalid_argument);
}
