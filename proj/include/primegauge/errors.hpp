#pragma once

#include <stdexcept>
#include <string>

namespace primegauge {

// A requested computation would exceed a configured resource ceiling
// (sieve memory ceiling, combinatorial counter ceiling).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A checkpoint cannot be used to resume the requested scan
// (fingerprint mismatch, inconsistent cursor, unreadable file).
class CheckpointError : public std::runtime_error {
public:
    explicit CheckpointError(const std::string& what) : std::runtime_error(what) {}
};

// Too few usable data points for a statistical operation.
class InsufficientDataError : public std::runtime_error {
public:
    explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace primegauge
