#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace primegauge {

// Resumable progress marker for a long-running scan. cursor is the last
// fully completed outer value (diagonal s for the pairwise scans). The
// fingerprint hashes the semantic scan parameters, so a checkpoint taken
// under different parameters is rejected on resume.
struct ScanCheckpoint {
    std::string scan_kind;
    uint64_t bound = 0;
    uint64_t cursor = 0;
    uint64_t violations_so_far = 0;
    std::string config_fingerprint;
    uint64_t engine_limit = 0;
};

// FNV-1a 64-bit as a 16-digit hex string. Not cryptographic; used only to
// fingerprint scan configurations.
std::string fnv1a_hex(std::string_view data);

// Canonical fingerprint over the fields that determine scan output.
// Output paths and worker counts are excluded: they do not change the
// report bytes (workers merge deterministically).
std::string scan_fingerprint(std::string_view kind, uint64_t bound, std::string_view format);

// Writes the checkpoint as a single JSON object, atomically
// (temp file in the same directory, then rename).
void save_checkpoint(const ScanCheckpoint& ck, const std::filesystem::path& path);

// Reads a checkpoint; nullopt when the file does not exist. Throws
// CheckpointError on unreadable or malformed content.
std::optional<ScanCheckpoint> load_checkpoint(const std::filesystem::path& path);

// Throws CheckpointError unless the checkpoint matches the scan about to
// resume: same fingerprint and bound, cursor <= bound, and an engine that
// still covers the bound.
void validate_checkpoint(const ScanCheckpoint& ck, std::string_view expected_fingerprint,
                         uint64_t bound, uint64_t engine_limit);

} // namespace primegauge
