#pragma once

#include <stdexcept>
#include <string>

namespace khtor {

// Bad user-facing input: malformed PD text, unknown table name, vector not in
// span, inconsistent linear system. The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A violated internal invariant (dimension mismatch, singular transition
// matrix, ...). Reaching this is a bug, not an input condition. Exit code 3.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

}  // namespace khtor
