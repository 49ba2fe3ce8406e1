// primegauge: prime-counting engine and conjecture scan harness.
//
// Exit codes: 0 clean, 1 completed with violations/discrepancies in the
// report, 2 usage or runtime error (also: interrupted scan). Data goes to
// stdout or --output; diagnostics go to stderr.

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "primegauge/checkpoint.hpp"
#include "primegauge/deviation.hpp"
#include "primegauge/equation.hpp"
#include "primegauge/errors.hpp"
#include "primegauge/legendre_pi.hpp"
#include "primegauge/prime_table.hpp"
#include "primegauge/scan.hpp"
#include "primegauge/sequences.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace primegauge;

namespace {

std::atomic<bool> g_stop{false};

void handle_signal(int) { g_stop.store(true); }

void diag(const std::string& msg) { std::cerr << "primegauge: " << msg << "\n"; }

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

PrimeTable build_table(uint64_t limit) {
    Timer t;
    PrimeTable table = PrimeTable::build(limit);
    diag("built prime table to " + std::to_string(limit) + " (" +
         std::to_string(table.prime_count()) + " primes) in " + std::to_string(t.ms()) + " ms");
    return table;
}

// The report stream: stdout by default, a file with --output. Resume mode
// seeds the file with the filtered prefix of the previous run.
struct Report {
    std::ofstream file;
    bool to_file = false;

    void open_file(const std::string& path, const std::string& prefix) {
        file.open(path, std::ios::trunc | std::ios::binary);
        if (!file) throw std::runtime_error("cannot write output file: " + path);
        file << prefix;
        to_file = true;
    }
    std::ostream& out() { return to_file ? static_cast<std::ostream&>(file) : std::cout; }
    void line(const std::string& s) { out() << s << '\n'; }
    void flush() { out().flush(); }
};

// ---- scan report lines ------------------------------------------------

const char* kScanCsvHeader = "kind,x,y,lhs,rhs";

std::string violation_line(const ViolationRecord& v, const std::string& format) {
    if (format == "csv") {
        std::string s(to_string(v.kind));
        s += ',' + std::to_string(v.x) + ',' + std::to_string(v.y) + ',' +
             std::to_string(v.lhs) + ',' + std::to_string(v.rhs);
        return s;
    }
    ordered_json j;
    j["kind"] = to_string(v.kind);
    j["x"] = v.x;
    j["y"] = v.y;
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
    if (!v.indices.empty()) j["indices"] = v.indices;
    return j.dump();
}

std::string summary_line(std::string_view kind, uint64_t bound, uint64_t pairs,
                         uint64_t violations, const std::string& format) {
    if (format == "csv") {
        std::string s = "summary,";
        s += std::string(kind) + ',' + std::to_string(bound) + ',' + std::to_string(pairs) +
             ',' + std::to_string(violations);
        return s;
    }
    ordered_json j;
    j["kind"] = kind;
    j["bound"] = bound;
    j["pairs_checked"] = pairs;
    j["violations"] = violations;
    return j.dump();
}

// Outer scan value a violation belongs to; used to trim a partial report
// back to the checkpoint cursor on resume.
uint64_t outer_of(std::string_view kind, uint64_t x, uint64_t y) {
    if (kind == "RATIO32") return x;
    return x + y; // diagonal scans: s = x + y (for COROLLARY1, p = x + y)
}

// Keeps complete violation lines at or below the cursor (and the CSV
// header); drops summary lines, later lines, and any trailing partial
// line. Returns the kept prefix and counts the violations in it.
std::string filter_report(const std::string& path, const std::string& format,
                          std::string_view kind, uint64_t cursor, uint64_t* kept_violations) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::string kept;
    *kept_violations = 0;
    size_t pos = 0;
    bool first = true;
    while (pos < content.size()) {
        size_t nl = content.find('\n', pos);
        if (nl == std::string::npos) break; // partial trailing line: drop
        std::string line = content.substr(pos, nl - pos);
        pos = nl + 1;

        if (format == "csv") {
            if (first && line == kScanCsvHeader) {
                kept += line + '\n';
                first = false;
                continue;
            }
            first = false;
            std::stringstream ss(line);
            std::string k, xs, ys, ls, rs;
            if (!std::getline(ss, k, ',') || k != kind) continue;
            if (!std::getline(ss, xs, ',') || !std::getline(ss, ys, ',') ||
                !std::getline(ss, ls, ',') || !std::getline(ss, rs, ','))
                continue;
            uint64_t x = 0, y = 0;
            try {
                x = std::stoull(xs);
                y = std::stoull(ys);
            } catch (...) {
                continue;
            }
            if (outer_of(kind, x, y) > cursor) continue;
            kept += line + '\n';
            ++*kept_violations;
        } else {
            auto j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.is_object()) continue;
            if (j.contains("bound")) continue; // summary line
            if (!j.contains("kind") || j["kind"] != kind) continue;
            if (!j.contains("x") || !j.contains("y")) continue;
            uint64_t x = j["x"].get<uint64_t>(), y = j["y"].get<uint64_t>();
            if (outer_of(kind, x, y) > cursor) continue;
            kept += line + '\n';
            ++*kept_violations;
        }
    }
    return kept;
}

// ---- scan subcommand driver -------------------------------------------

struct ScanArgs {
    uint64_t bound = 0;
    std::string format;
    std::string output;
    std::string checkpoint;
    bool resume = false;
    unsigned workers = 0;
    uint64_t every = 1024;
};

void add_common_flags(CLI::App* cmd, ScanArgs& a, const std::string& default_format) {
    a.format = default_format;
    cmd->add_option("--format", a.format, "report format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    cmd->add_option("--output", a.output, "write the report to a file instead of stdout");
    cmd->add_option("--workers", a.workers, "worker threads (0 = hardware parallelism)");
    cmd->add_option("--checkpoint", a.checkpoint, "checkpoint file, written as the scan advances");
    cmd->add_flag("--resume", a.resume, "resume from the checkpoint file if it exists");
    cmd->add_option("--checkpoint-every", a.every, "outer values per checkpoint")
        ->check(CLI::PositiveNumber);
}

template <typename ScanFn>
int run_scan(const ScanArgs& args, std::string_view kind, const PrimeTable& table,
             ScanFn&& scan) {
    const std::string fp = scan_fingerprint(kind, args.bound, args.format);

    uint64_t resume_cursor = 0;
    uint64_t resume_violations = 0;
    std::string prefix;
    if (args.resume) {
        if (args.checkpoint.empty()) {
            throw std::runtime_error("--resume requires --checkpoint");
        }
        auto ck = load_checkpoint(args.checkpoint);
        if (ck) {
            validate_checkpoint(*ck, fp, args.bound, table.limit());
            resume_cursor = ck->cursor;
            resume_violations = ck->violations_so_far;
            if (!args.output.empty() && fs::exists(args.output)) {
                // the file is the source of truth for already-emitted lines
                prefix = filter_report(args.output, args.format, kind, resume_cursor,
                                       &resume_violations);
            }
            diag("resuming " + std::string(kind) + " at cursor " +
                 std::to_string(resume_cursor) + " with " + std::to_string(resume_violations) +
                 " prior violations");
        } else {
            diag("no checkpoint at " + args.checkpoint + ", starting fresh");
        }
    }

    Report report;
    if (!args.output.empty()) report.open_file(args.output, prefix);
    if (args.format == "csv" && resume_cursor == 0) report.line(kScanCsvHeader);

    ScanOptions opts;
    opts.workers = args.workers;
    opts.chunk = args.every;
    opts.resume_cursor = resume_cursor;
    opts.resume_violations = resume_violations;
    opts.stop = &g_stop;
    opts.config_fingerprint = fp;
    opts.sink = [&](const ViolationRecord& v) { report.line(violation_line(v, args.format)); };
    if (!args.checkpoint.empty()) {
        // flush the data stream first so the checkpoint never runs ahead of
        // the durable report
        opts.on_checkpoint = [&](const ScanCheckpoint& ck) {
            report.flush();
            save_checkpoint(ck, args.checkpoint);
        };
    }

    Timer t;
    ScanReport result = scan(opts);
    if (!result.completed) {
        report.flush();
        diag("interrupted at cursor " + std::to_string(result.cursor) +
             "; rerun with --resume to continue");
        return 2;
    }

    uint64_t total = resume_violations + result.violations.size();
    report.line(summary_line(kind, result.bound, result.pairs_checked, total, args.format));
    report.flush();
    diag(std::string(kind) + " scan of bound " + std::to_string(result.bound) + " done in " +
         std::to_string(t.ms()) + " ms: " + std::to_string(result.pairs_checked) + " pairs, " +
         std::to_string(total) + " violations");
    return total > 0 ? 1 : 0;
}

// ---- other subcommands --------------------------------------------------

int cmd_pi(uint64_t x, Report& report) {
    uint64_t value;
    if (x <= 10000000) {
        value = PrimeTable::build(std::max<uint64_t>(x, 2)).pi(x);
    } else {
        Timer t;
        value = pi_unbounded(x);
        diag("combinatorial count of " + std::to_string(x) + " in " + std::to_string(t.ms()) +
             " ms");
    }
    report.line(std::to_string(value));
    return 0;
}

int cmd_nth_prime(uint64_t n, Report& report) {
    if (n == 0) throw std::runtime_error("nth-prime: index is 1-based");
    PrimeTable table = build_table(nth_prime_upper_bound(n));
    report.line(std::to_string(table.nth_prime(n)));
    return 0;
}

int cmd_check_multi(const std::vector<uint64_t>& indices, const std::string& format,
                    Report& report) {
    uint64_t sum = 0;
    for (uint64_t a : indices) sum += a;
    PrimeTable table = build_table(nth_prime_upper_bound(std::max<uint64_t>(sum, 4)));
    PrimeIndex index(table);
    auto res = check_multi_superadd(index, indices);
    if (format == "csv") {
        report.line("indices,sum_index,lhs,rhs,holds");
        report.line(join_indices(res.indices) + ',' + std::to_string(res.sum_index) + ',' +
                    std::to_string(res.lhs) + ',' + std::to_string(res.rhs) + ',' +
                    (res.holds ? "true" : "false"));
    } else {
        ordered_json j;
        j["indices"] = join_indices(res.indices);
        j["sum_index"] = res.sum_index;
        j["lhs"] = res.lhs;
        j["rhs"] = res.rhs;
        j["holds"] = res.holds;
        report.line(j.dump());
    }
    return res.holds ? 0 : 1;
}

int cmd_defect(const std::string& seq_name, uint64_t n_max, const std::string& format,
               Report& report) {
    PrimeTable table = build_table(std::max<uint64_t>(n_max + 2, 10));
    auto seq = named_sequence(seq_name, table, n_max);
    Timer t;
    auto res = compute_defect(seq, n_max, seq_name);
    diag("defect over " + seq_name + " to " + std::to_string(n_max) + " in " +
         std::to_string(t.ms()) + " ms");

    // a positive defect for the primes sequence contradicts the pairwise
    // inequality scan and is reported as a violation
    bool violation = seq_name == "primes" && res.defect > 0;
    if (violation) {
        auto count = [&seq](uint64_t v) {
            return (uint64_t)(std::upper_bound(seq.begin(), seq.end(), v) - seq.begin());
        };
        ViolationRecord v{ViolationKind::SUBSET_DEFECT, res.witness_x, res.witness_y,
                          count(res.witness_x + res.witness_y),
                          count(res.witness_x) + count(res.witness_y),
                          {}};
        if (format == "csv") report.line(kScanCsvHeader);
        report.line(violation_line(v, format));
    }

    if (format == "csv") {
        report.line("sequence,bound,defect,witness_x,witness_y");
        report.line(res.sequence_name + ',' + std::to_string(res.bound) + ',' +
                    std::to_string(res.defect) + ',' + std::to_string(res.witness_x) + ',' +
                    std::to_string(res.witness_y));
    } else {
        ordered_json j;
        j["sequence"] = res.sequence_name;
        j["bound"] = res.bound;
        j["defect"] = res.defect;
        j["witness_x"] = res.witness_x;
        j["witness_y"] = res.witness_y;
        report.line(j.dump());
    }
    return violation ? 1 : 0;
}

int cmd_solve_eq(uint64_t p, const std::string& convention, const std::string& format,
                 Report& report) {
    PrimeTable table = build_table(std::max<uint64_t>(p, 10));
    auto set = solve_pi_split(table, p, parse_convention(convention));
    if (format == "csv") {
        report.line("p,convention,xs");
        report.line(std::to_string(set.p) + ',' + std::string(to_string(set.convention)) + ',' +
                    join_xs(set.xs));
    } else {
        ordered_json j;
        j["p"] = set.p;
        j["convention"] = to_string(set.convention);
        j["xs"] = set.xs;
        report.line(j.dump());
    }
    return 0;
}

int cmd_classify_eq(uint64_t p_max, const std::string& convention, const std::string& format,
                    Report& report) {
    PrimeTable table = build_table(std::max<uint64_t>(p_max, 10));
    Timer t;
    auto result = classify_solution_sets(table, p_max, parse_convention(convention));
    auto cmp = compare_with_known_shapes(result);
    diag("classified " + std::to_string(result.sets.size()) + " primes into " +
         std::to_string(result.shapes.size()) + " shapes in " + std::to_string(t.ms()) + " ms");

    if (format == "csv") {
        report.line("p,convention,xs,shape_id");
        for (size_t i = 0; i < result.sets.size(); ++i) {
            report.line(std::to_string(result.sets[i].p) + ',' +
                        std::string(to_string(result.convention)) + ',' +
                        join_xs(result.sets[i].xs) + ',' + std::to_string(result.shape_ids[i]));
        }
        for (const auto& k : cmp.known) {
            report.line("known_shape," + join_xs(k.xs) + ',' + (k.found ? "found" : "missing") +
                        ',' + std::to_string(k.first_p));
        }
        for (const auto& e : cmp.extras) {
            report.line("extra_shape," + join_xs(e.xs) + ',' + std::to_string(e.first_p) + ',' +
                        std::to_string(e.count));
        }
        report.line("summary,classify," + std::to_string(p_max) + ',' +
                    std::to_string(result.sets.size()) + ',' +
                    std::to_string(result.shapes.size()) + ',' +
                    std::to_string(cmp.discrepancies));
    } else {
        for (size_t i = 0; i < result.sets.size(); ++i) {
            ordered_json j;
            j["record"] = "solution_set";
            j["p"] = result.sets[i].p;
            j["convention"] = to_string(result.convention);
            j["xs"] = result.sets[i].xs;
            j["shape_id"] = result.shape_ids[i];
            report.line(j.dump());
        }
        for (const auto& k : cmp.known) {
            ordered_json j;
            j["record"] = "known_shape";
            j["xs"] = k.xs;
            j["found"] = k.found;
            j["first_p"] = k.first_p;
            report.line(j.dump());
        }
        for (const auto& e : cmp.extras) {
            ordered_json j;
            j["record"] = "extra_shape";
            j["xs"] = e.xs;
            j["first_p"] = e.first_p;
            j["count"] = e.count;
            report.line(j.dump());
        }
        ordered_json j;
        j["record"] = "summary";
        j["p_max"] = p_max;
        j["primes"] = result.sets.size();
        j["shapes"] = result.shapes.size();
        j["discrepancies"] = cmp.discrepancies;
        report.line(j.dump());
    }
    return cmp.discrepancies > 0 ? 1 : 0;
}

ordered_json fit_json(const FitResult& f) {
    ordered_json j;
    j["model"] = f.model;
    j["exponent"] = f.exponent;
    j["coefficient"] = f.coefficient;
    j["r_squared"] = f.r_squared;
    j["n_points"] = f.n_points;
    return j;
}

int cmd_deviations(uint64_t l_max, const std::string& sign_name, const std::string& format,
                   Report& report) {
    SignConvention sign = parse_sign(sign_name);
    uint64_t top_index = l_max * (l_max + 1) / 2;
    PrimeTable table = build_table(nth_prime_upper_bound(std::max<uint64_t>(top_index, 6)));
    Timer t;
    auto rows = deviation_series(table, l_max);
    diag("deviation series to L = " + std::to_string(l_max) + " in " + std::to_string(t.ms()) +
         " ms");

    uint64_t nonneg_d = 0; // rows L >= 3 with d >= 0 break the expected sign
    for (const auto& r : rows) {
        if (r.L >= 3 && r.d >= 0) ++nonneg_d;
    }

    if (format == "csv") {
        report.line("L,index_sum,prime_sum,p_at_index_sum,d,trend,residual");
        for (const auto& r : rows) {
            report.line(std::to_string(r.L) + ',' + std::to_string(r.index_sum) + ',' +
                        std::to_string(r.prime_sum) + ',' + std::to_string(r.p_at_index_sum) +
                        ',' + std::to_string(r.d) + ',' + std::to_string(r.trend) + ',' +
                        std::to_string(r.residual(sign)));
        }
    } else {
        for (const auto& r : rows) {
            ordered_json j;
            j["L"] = r.L;
            j["index_sum"] = r.index_sum;
            j["prime_sum"] = r.prime_sum;
            j["p_at_index_sum"] = r.p_at_index_sum;
            j["d"] = r.d;
            j["trend"] = r.trend;
            j["residual"] = r.residual(sign);
            report.line(j.dump());
        }
    }

    auto fits = fit_trend(rows, sign);
    ordered_json j;
    j["sign"] = to_string(sign);
    j["l_max"] = l_max;
    j["nonnegative_d_rows"] = nonneg_d;
    j["fit_abs_deviation"] = fit_json(fits.abs_deviation);
    j["fit_abs_residual"] = fits.abs_residual ? fit_json(*fits.abs_residual) : ordered_json();
    if (rows.size() >= 32) {
        std::vector<double> residuals;
        residuals.reserve(rows.size());
        for (const auto& r : rows) residuals.push_back((double)r.residual(sign));
        ordered_json peaks = ordered_json::array();
        for (const auto& pk : periodicity_scan(residuals)) {
            ordered_json o;
            o["lag"] = pk.lag;
            o["r"] = pk.r;
            peaks.push_back(o);
        }
        j["periodicity"] = peaks;
    } else {
        j["periodicity"] = ordered_json();
    }
    report.line(j.dump());
    return nonneg_d > 0 ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, handle_signal);
    std::signal(SIGTERM, handle_signal);

    CLI::App app{"prime counting engine and conjecture scan harness"};
    app.require_subcommand(1);

    // pi X
    uint64_t pi_x = 0;
    auto* c_pi = app.add_subcommand("pi", "count primes <= X");
    c_pi->add_option("x", pi_x, "upper bound")->required();

    // nth-prime N
    uint64_t nth_n = 0;
    auto* c_nth = app.add_subcommand("nth-prime", "the N-th prime, 1-based");
    c_nth->add_option("n", nth_n, "index")->required();

    // scans
    ScanArgs hl;
    hl.bound = 100000;
    auto* c_hl = app.add_subcommand("check-hl",
                                    "verify pi(x+y) <= pi(x) + pi(y) for 2 <= x <= y, x+y <= max");
    c_hl->add_option("--max", hl.bound, "largest x+y scanned");
    add_common_flags(c_hl, hl, "jsonl");

    ScanArgs c1;
    c1.bound = 100000;
    auto* c_c1 = app.add_subcommand(
        "check-c1", "verify pi(x) + pi(p-x) != pi(p-1) for primes p <= p-max, 2 <= x <= p-2");
    c_c1->add_option("--p-max", c1.bound, "largest prime scanned");
    add_common_flags(c_c1, c1, "jsonl");

    ScanArgs sup;
    sup.bound = 20000;
    auto* c_sup = app.add_subcommand(
        "check-superadd", "verify p_(a+b) > p_a + p_b for 2 <= a <= b, a+b <= max");
    c_sup->add_option("--max", sup.bound, "largest index sum scanned");
    add_common_flags(c_sup, sup, "jsonl");

    ScanArgs ratio;
    ratio.bound = 10000000;
    auto* c_ratio = app.add_subcommand("check-ratio",
                                       "verify 3 pi(x-1) <= 2 pi(2x-1) for 1 <= x <= max");
    c_ratio->add_option("--max", ratio.bound, "largest x scanned");
    add_common_flags(c_ratio, ratio, "jsonl");

    // check-multi A B C ...
    std::vector<uint64_t> multi_indices;
    std::string multi_format = "jsonl", multi_output;
    auto* c_multi = app.add_subcommand("check-multi",
                                       "check p_(sum of indices) > sum of indexed primes");
    c_multi->add_option("indices", multi_indices, "prime indices, each >= 2")->required();
    c_multi->add_option("--format", multi_format, "report format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    c_multi->add_option("--output", multi_output, "write the report to a file");

    // defect
    std::string defect_seq = "primes", defect_format = "jsonl", defect_output;
    uint64_t defect_max = 10000;
    auto* c_defect = app.add_subcommand(
        "defect", "largest count(x+y) - count(x) - count(y) over a sequence");
    c_defect->add_option("--seq", defect_seq, "sequence to rank")
        ->check(CLI::IsMember({"primes", "twins", "evens"}));
    c_defect->add_option("--max", defect_max, "largest x+y scanned");
    c_defect->add_option("--format", defect_format, "report format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    c_defect->add_option("--output", defect_output, "write the report to a file");

    // solve-eq P
    uint64_t solve_p = 0;
    std::string solve_convention = "half", solve_format = "csv", solve_output;
    auto* c_solve = app.add_subcommand("solve-eq",
                                       "solutions x of pi(p) = pi(x) + pi(p-x) at a prime p");
    c_solve->add_option("p", solve_p, "prime >= 5")->required();
    c_solve->add_option("--convention", solve_convention, "x-range convention")
        ->check(CLI::IsMember({"full", "half", "half-open"}));
    c_solve->add_option("--format", solve_format, "report format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    c_solve->add_option("--output", solve_output, "write the report to a file");

    // classify-eq
    uint64_t classify_p_max = 10000;
    std::string classify_convention = "half", classify_format = "csv", classify_output;
    auto* c_classify = app.add_subcommand(
        "classify-eq", "group primes <= p-max by the shape of their solution set");
    c_classify->add_option("--p-max", classify_p_max, "largest prime classified");
    c_classify->add_option("--convention", classify_convention, "x-range convention")
        ->check(CLI::IsMember({"full", "half", "half-open"}));
    c_classify->add_option("--format", classify_format, "report format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    c_classify->add_option("--output", classify_output, "write the report to a file");

    // deviations
    uint64_t dev_l_max = 1436;
    std::string dev_sign = "neg", dev_format = "csv", dev_output;
    auto* c_dev = app.add_subcommand(
        "deviations", "series sum(p_1..p_L) - p_(L(L+1)/2) with trend fits and periodicity");
    c_dev->add_option("--l-max", dev_l_max, "largest L")->check(CLI::PositiveNumber);
    c_dev->add_option("--sign", dev_sign, "residual sign convention")
        ->check(CLI::IsMember({"pos", "neg"}));
    c_dev->add_option("--format", dev_format, "report format")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    c_dev->add_option("--output", dev_output, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // help/version exit 0, usage errors exit 2
    }

    try {
        auto simple_report = [](const std::string& path) {
            Report r;
            if (!path.empty()) r.open_file(path, "");
            return r;
        };

        if (*c_pi) {
            Report r;
            return cmd_pi(pi_x, r);
        }
        if (*c_nth) {
            Report r;
            return cmd_nth_prime(nth_n, r);
        }
        if (*c_hl) {
            PrimeTable table = build_table(std::max<uint64_t>(hl.bound, 4));
            return run_scan(hl, "HL", table,
                            [&](const ScanOptions& o) { return scan_hl(table, hl.bound, o); });
        }
        if (*c_c1) {
            PrimeTable table = build_table(std::max<uint64_t>(c1.bound, 5));
            return run_scan(c1, "COROLLARY1", table, [&](const ScanOptions& o) {
                return scan_corollary1(table, c1.bound, o);
            });
        }
        if (*c_sup) {
            PrimeTable table =
                build_table(nth_prime_upper_bound(std::max<uint64_t>(sup.bound, 4)));
            return run_scan(sup, "SUPERADD", table, [&](const ScanOptions& o) {
                return scan_superadditivity(table, sup.bound, o);
            });
        }
        if (*c_ratio) {
            PrimeTable table = build_table(std::max<uint64_t>(2 * ratio.bound - 1, 4));
            return run_scan(ratio, "RATIO32", table, [&](const ScanOptions& o) {
                return scan_ratio_conjecture(table, ratio.bound, o);
            });
        }
        if (*c_multi) {
            Report r = simple_report(multi_output);
            return cmd_check_multi(multi_indices, multi_format, r);
        }
        if (*c_defect) {
            Report r = simple_report(defect_output);
            return cmd_defect(defect_seq, defect_max, defect_format, r);
        }
        if (*c_solve) {
            Report r = simple_report(solve_output);
            return cmd_solve_eq(solve_p, solve_convention, solve_format, r);
        }
        if (*c_classify) {
            Report r = simple_report(classify_output);
            return cmd_classify_eq(classify_p_max, classify_convention, classify_format, r);
        }
        if (*c_dev) {
            Report r = simple_report(dev_output);
            return cmd_deviations(dev_l_max, dev_sign, dev_format, r);
        }
    } catch (const std::exception& e) {
        diag(e.what());
        return 2;
    }
    return 2;
}
