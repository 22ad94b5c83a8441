#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace a3gn {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input with an inadmissible shape or value.
struct shape_error : error {
    using error::error;
};

// Bad user-supplied configuration (unknown key, missing path, empty dataset, ...).
struct config_error : error {
    using error::error;
};

// Operation not permitted in the current mode (e.g. gradients through a
// black-box embedder).
struct mode_error : error {
    using error::error;
};

// Degenerate numerical situation with a defined cause (zero-norm embedding,
// zero variance without eps).
struct degenerate_error : error {
    using error::error;
};

// Non-finite values or other numerical failure.
struct numeric_error : error {
    using error::error;
};

// FNV-1a, used for config hashes and parameter fingerprints.
inline std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ull) {
    return fnv1a(s.data(), s.size(), h);
}

}  // namespace a3gn
