#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey {

// Thrown on precondition violations and malformed inputs. Domain outcomes
// (no extension exists, refusal, unknown safeness) are returned as values,
// not exceptions.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw error(msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

// FNV-1a, used for input digests in run records.
inline std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace ramsey
