#pragma once

#include <stdexcept>
#include <string>

namespace bsym {

// Bad input (unparsable word, unknown flag, insufficient cutoff): exit code 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// A computation that cannot proceed (missing boundary data, non-chain map,
// internal consistency failure): exit code 1.
struct ComputationError : std::runtime_error {
    explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bsym
