#pragma once

#include <stdexcept>
#include <string>

namespace weylq {

/**
 * Error raised for invalid user input (bad flags, malformed partitions,
 * out-of-domain parameters).  The CLI maps it to exit code 1.
 */
class user_error : public std::runtime_error {
public:
    explicit user_error(const std::string& msg) : std::runtime_error(msg) {}
};

/**
 * Error raised when an internal consistency check fails (exact division with
 * nonzero remainder, oracle mismatch, violated invariant).  Reaching this
 * means a bug, never bad input.  The CLI maps it to exit code 2.
 */
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require_user(bool cond, const std::string& msg) {
    if (!cond) throw user_error(msg);
}

inline void require_internal(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

} // namespace weylq
