#include "primegauge/checkpoint.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "primegauge/errors.hpp"

namespace primegauge {

std::string fnv1a_hex(std::string_view data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string scan_fingerprint(std::string_view kind, uint64_t bound, std::string_view format) {
    std::ostringstream canon;
    canon << "primegauge.scan.v1|kind=" << kind << "|bound=" << bound << "|format=" << format;
    return fnv1a_hex(canon.str());
}

void save_checkpoint(const ScanCheckpoint& ck, const std::filesystem::path& path) {
    nlohmann::ordered_json j;
    j["scan_kind"] = ck.scan_kind;
    j["bound"] = ck.bound;
    j["cursor"] = ck.cursor;
    j["violations_so_far"] = ck.violations_so_far;
    j["config_fingerprint"] = ck.config_fingerprint;
    j["engine_limit"] = ck.engine_limit;

    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw CheckpointError("cannot write checkpoint file " + tmp.string());
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
}

std::optional<ScanCheckpoint> load_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        if (!std::filesystem::exists(path)) return std::nullopt;
        throw CheckpointError("cannot read checkpoint file " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
        ScanCheckpoint ck;
        ck.scan_kind = j.at("scan_kind").get<std::string>();
        ck.bound = j.at("bound").get<uint64_t>();
        ck.cursor = j.at("cursor").get<uint64_t>();
        ck.violations_so_far = j.at("violations_so_far").get<uint64_t>();
        ck.config_fingerprint = j.at("config_fingerprint").get<std::string>();
        ck.engine_limit = j.at("engine_limit").get<uint64_t>();
        return ck;
    } catch (const nlohmann::json::exception& e) {
        throw CheckpointError("malformed checkpoint " + path.string() + ": " + e.what());
    }
}

void validate_checkpoint(const ScanCheckpoint& ck, std::string_view expected_fingerprint,
                         uint64_t bound, uint64_t engine_limit) {
    if (ck.config_fingerprint != expected_fingerprint) {
        throw CheckpointError("checkpoint fingerprint " + ck.config_fingerprint +
                              " does not match current configuration " +
                              std::string(expected_fingerprint));
    }
    if (ck.bound != bound) {
        throw CheckpointError("checkpoint bound " + std::to_string(ck.bound) +
                              " does not match requested bound " + std::to_string(bound));
    }
    if (ck.cursor > ck.bound) {
        throw CheckpointError("checkpoint cursor " + std::to_string(ck.cursor) +
                              " exceeds bound " + std::to_string(ck.bound));
    }
    if (engine_limit < bound) {
        throw CheckpointError("engine limit " + std::to_string(engine_limit) +
                              " no longer covers scan bound " + std::to_string(bound));
    }
}

} // namespace primegauge
