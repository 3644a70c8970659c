#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subpair {

using i64 = std::int64_t;

// Bad user-supplied data (CLI input, out-of-range constructor arguments).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Broken internal invariant; indicates a bug, never a bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw input_error(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

}  // namespace subpair
