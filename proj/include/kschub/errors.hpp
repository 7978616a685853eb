#ifndef KSCHUB_ERRORS_HPP
#define KSCHUB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kschub {

// Violation of an internal invariant (a bug, not a usage error).
// The CLI maps this to exit code 3.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline void check_invariant(bool cond, const std::string& msg) {
    if (!cond) throw invariant_violation(msg);
}

} // namespace kschub

#endif
