#ifndef SUBOPLEX_ERRORS_HPP
#define SUBOPLEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace suboplex {

// Mismatched (n, m) between operands, or malformed input values.
struct shape_error : std::invalid_argument {
    explicit shape_error(const std::string& what) : std::invalid_argument(what) {}
};

// Constructor parameters or computation size outside the configured limits.
struct size_limit_error : std::runtime_error {
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation's stated precondition does not hold for the given input.
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// Two redundant computation routes disagreed.  Always a bug; the CLI maps
// this to exit code 3 and never silently prefers one route.
struct discrepancy_error : std::logic_error {
    explicit discrepancy_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace suboplex

#endif
